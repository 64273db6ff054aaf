#include "htoric/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace htoric {

unsigned Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0u); }

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exps.size() != b.exps.size()) throw DimensionMismatch("monomial variable count mismatch");
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
  return m;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exps > b.exps;
}

namespace {

void fill_monomials(std::size_t var, unsigned remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == cur.exps.size()) {
    cur.exps[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.exps[var] = e;
    fill_monomials(var + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned k) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (k == 0) out.push_back(Monomial{});
    return out;
  }
  Monomial cur{std::vector<unsigned>(num_vars, 0)};
  fill_monomials(0, k, cur, out);
  return out;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Integer& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial{std::vector<unsigned>(num_vars, 0)}, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw DimensionMismatch("variable index out of range");
  Monomial m{std::vector<unsigned>(num_vars, 0)};
  m.exps[i] = 1;
  return monomial(m);
}

Polynomial Polynomial::linear_form(std::span<const Integer> w) {
  Polynomial p(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Monomial m{std::vector<unsigned>(w.size(), 0)};
    m.exps[i] = 1;
    p.add_term(m, w[i]);
  }
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
  Polynomial p(m.exps.size());
  p.add_term(m, c);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned Polynomial::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (m.exps.size() != num_vars_) throw DimensionMismatch("monomial variable count mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw DimensionMismatch("polynomial variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw DimensionMismatch("polynomial variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw DimensionMismatch("polynomial variable count mismatch");
  Polynomial p(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(num_vars_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, std::size_t target_vars) const {
  if (images.size() != num_vars_) throw DimensionMismatch("substitute: wrong number of images");
  Polynomial out(target_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target_vars, c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (m.exps[i] == 0) continue;
      if (images[i].num_vars() != target_vars) throw DimensionMismatch("substitute: image variable count");
      term = term * images[i].pow(m.exps[i]);
    }
    out += term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_vars = m.degree() > 0;
    if (!has_vars || mag != 1) {
      os << mag;
      if (has_vars) os << '*';
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << 't' << (i + 1);
      if (m.exps[i] > 1) os << '^' << m.exps[i];
    }
  }
  return os.str();
}

}  // namespace htoric
