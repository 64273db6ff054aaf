#include "htoric/characters.hpp"

#include <algorithm>
#include <sstream>

namespace htoric {

bool is_trivial_character(const IntVector& w) {
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

void CharacterClass::add(const IntVector& w, const Rational& mult) {
  if (w.size() != rank_) throw DimensionMismatch("character rank mismatch");
  if (mult == 0) return;
  if (is_trivial_character(w)) {
    if (!is_integral(mult)) throw Error("trivial character needs an integer multiplicity");
    trivial_ += numerator_of(mult);
    return;
  }
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational CharacterClass::multiplicity(const IntVector& w) const {
  if (is_trivial_character(w)) return Rational(trivial_);
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool CharacterClass::is_bundle() const {
  if (trivial_ < 0) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integral(t.second) && t.second > 0; });
}

CharacterClass& CharacterClass::operator+=(const CharacterClass& o) {
  if (o.rank_ != rank_) throw DimensionMismatch("character class rank mismatch");
  for (const auto& [w, m] : o.terms_) add(w, m);
  trivial_ += o.trivial_;
  return *this;
}

CharacterClass& CharacterClass::operator-=(const CharacterClass& o) {
  if (o.rank_ != rank_) throw DimensionMismatch("character class rank mismatch");
  for (const auto& [w, m] : o.terms_) add(w, -m);
  trivial_ -= o.trivial_;
  return *this;
}

std::string CharacterClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& m, const std::string& name) {
    Rational mag = m < 0 ? Rational(-m) : m;
    if (first) {
      if (m < 0) os << '-';
    } else {
      os << (m < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << htoric::to_string(mag) << '*';
    os << name;
  };
  for (const auto& [w, m] : terms_) {
    std::string name = "chi(";
    for (std::size_t i = 0; i < w.size(); ++i) name += (i ? "," : "") + w[i].str();
    emit(m, name + ")");
  }
  if (trivial_ != 0) emit(Rational(trivial_), "1");
  return first ? "0" : os.str();
}

}  // namespace htoric
