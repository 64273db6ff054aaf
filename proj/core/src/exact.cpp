#include "htoric/exact.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace htoric {

namespace mp = boost::multiprecision;

Integer numerator_of(const Rational& r) { return mp::numerator(r); }
Integer denominator_of(const Rational& r) { return mp::denominator(r); }

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error("division by zero");
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  Integer m = abs(b);
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Rational floor(const Rational& r) {
  return Rational(floor_div(numerator_of(r), denominator_of(r)));
}

Rational frac(const Rational& r) { return r - floor(r); }

bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

RationalVector canonical_mod_one(const RationalVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(frac(x));
  return out;
}

bool is_integral(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_integral(r); });
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InvalidInput("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidInput("malformed integer literal '" + s + "'");
  }
  Integer value(s[0] == '+' ? s.substr(1) : s);
  return value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer p = parse_integer(text.substr(0, slash));
  Integer q = parse_integer(text.substr(slash + 1));
  if (q == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Rational dot(std::span<const Integer> w, std::span<const Rational> v) {
  if (w.size() != v.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += Rational(w[i]) * v[i];
  return s;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw DimensionMismatch("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) m(r, j) = (*this)(r, cols[j]);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

// Bareiss fraction-free elimination.
Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const {
  IntMatrix a = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a(p, c) == 0) ++p;
    if (p == rows_) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a(i, c) == 0) continue;
      Integer f = a(i, c);
      Integer g = a(r, c);
      for (std::size_t j = c; j < cols_; ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
    }
    ++r;
  }
  return r;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector length mismatch");
  IntVector y(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

RationalVector IntMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector length mismatch");
  RationalVector y(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += Rational((*this)(r, c)) * x[c];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

IntVector SnfResult::diagonal() const {
  IntVector d;
  const std::size_t k = std::min(D.rows(), D.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  const std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

namespace {

struct SnfState {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) { d.swap_rows(a, b); u.swap_rows(a, b); }
  void swap_cols(std::size_t a, std::size_t b) { d.swap_cols(a, b); v.swap_cols(a, b); }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    d.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    d.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }

  // Moves the smallest nonzero |entry| of row t / column t to (t,t).
  void pivot_on_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    Integer best = abs(d(t, t));
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      Integer a = abs(d(i, t));
      if (a != 0 && (best == 0 || a < best)) { best = a; bi = i; bj = t; }
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      Integer a = abs(d(t, j));
      if (a != 0 && (best == 0 || a < best)) { best = a; bi = t; bj = j; }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }
};

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest-absolute-value pivot in the trailing block
    std::size_t pi = rows, pj = cols;
    Integer best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        Integer a = abs(s.d(i, j));
        if (a != 0 && (best == 0 || a < best)) { best = a; pi = i; pj = j; }
      }
    if (pi == rows) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.d(i, t) == 0) continue;
        s.add_row(i, t, -(s.d(i, t) / s.d(t, t)));
        if (s.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.d(t, j) == 0) continue;
        s.add_col(j, t, -(s.d(t, j) / s.d(t, t)));
        if (s.d(t, j) != 0) clean = false;
      }
      if (!clean) {
        s.pivot_on_cross(t);
        continue;
      }
      // divisibility of the trailing block
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.d(i, j) % s.d(t, t) != 0) {
            s.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (s.d(t, t) < 0) {
      s.d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return SnfResult{std::move(s.u), std::move(s.d), std::move(s.v)};
}

// ---------------------------------------------------------------------------

std::optional<RationalVector> solve_rational(const IntMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve_rational: rhs length != rows");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<RationalVector> a(rows, RationalVector(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = Rational(m(r, c));
    a[r][cols] = b[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  RationalVector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = a[i][cols];
  return x;
}

std::vector<RationalVector> cokernel_torsion_elements(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("cokernel_torsion_elements: matrix not square");
  const Integer det = abs(m.determinant());
  if (det == 0) throw SingularMatrix("cokernel_torsion_elements: singular matrix");
  if (det > (Integer(1) << 40)) throw InvalidInput("cokernel_torsion_elements: group of order " + det.str() + " is too large to enumerate");
  const std::size_t d = m.rows();
  // U M^T V = D  =>  M^T v integral iff v = V w with w_i in (1/d_i) Z.
  // With L = d_last every element is (numerators mod L) / L, and stepping
  // w_i by 1/d_i adds V e_i (L / d_i); wrapping k_i around adds a multiple of L.
  SnfResult s = snf(m.transpose());
  IntVector diag = s.diagonal();
  const long long big = static_cast<long long>(diag.back());
  std::vector<long long> order(d);
  std::vector<std::vector<long long>> step(d, std::vector<long long>(d));
  for (std::size_t i = 0; i < d; ++i) {
    order[i] = static_cast<long long>(diag[i]);
    Integer scale = diag.back() / diag[i];
    for (std::size_t r = 0; r < d; ++r) step[i][r] = static_cast<long long>(mod_floor(s.V(r, i) * scale, diag.back()));
  }

  std::vector<std::vector<long long>> nums;
  nums.reserve(static_cast<std::size_t>(det));
  std::vector<long long> k(d, 0), cur(d, 0);
  for (;;) {
    nums.push_back(cur);
    std::size_t i = 0;
    for (; i < d; ++i) {
      for (std::size_t r = 0; r < d; ++r) {
        cur[r] += step[i][r];
        if (cur[r] >= big) cur[r] -= big;
      }
      if (++k[i] < order[i]) break;
      k[i] = 0;  // order[i] * step[i] is 0 mod L, so cur is already back
    }
    if (i == d) break;
  }
  // common denominator, so numerator order is the rational order
  std::sort(nums.begin(), nums.end());
  nums.erase(std::unique(nums.begin(), nums.end()), nums.end());

  std::vector<Rational> fractions(static_cast<std::size_t>(big));
  for (long long j = 0; j < big; ++j) fractions[static_cast<std::size_t>(j)] = Rational(Integer(j), diag.back());
  std::vector<RationalVector> out;
  out.reserve(nums.size());
  for (const auto& n : nums) {
    RationalVector v(d);
    for (std::size_t r = 0; r < d; ++r) v[r] = fractions[static_cast<std::size_t>(n[r])];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace htoric
