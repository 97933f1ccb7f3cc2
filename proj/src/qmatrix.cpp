#include "contactlie/qmatrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace contactlie {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + rhs.data_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - rhs.data_[i];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j) == 0) continue;
        r.at(i, j) += aik * rhs.at(k, j);
      }
    }
  return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v == 0; });
}

QMatrix QMatrix::transposed() const {
  QMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rational QMatrix::trace() const {
  Rational t(0);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

QVec mat_vec(const QMatrix& a, const QVec& x) {
  QVec y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0 && x[j] != 0) y[i] += a.at(i, j) * x[j];
  return y;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    Rational inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<QVec> kernel_basis(const QMatrix& a) {
  QMatrix m = a;
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(a.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  QVec x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Rational determinant(QMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a.at(sel, col) == 0) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    Rational inv = 1 / a.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      Rational f = a.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return det;
}

void RowSpace::insert(const QVec& v) {
  QVec r = reduce(v);
  auto lead = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
  if (lead == r.end()) return;
  Rational inv = 1 / *lead;
  for (auto& x : r) x *= inv;
  std::size_t lead_idx = std::size_t(lead - r.begin());
  // keep existing rows reduced against the new one
  for (auto& row : rows_) {
    if (row[lead_idx] == 0) continue;
    Rational f = row[lead_idx];
    for (std::size_t j = 0; j < ambient_; ++j) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  std::sort(rows_.begin(), rows_.end(), [](const QVec& a, const QVec& b) {
    auto la = std::find_if(a.begin(), a.end(), [](const Rational& x) { return x != 0; });
    auto lb = std::find_if(b.begin(), b.end(), [](const Rational& x) { return x != 0; });
    return (la - a.begin()) < (lb - b.begin());
  });
}

bool RowSpace::contains(const QVec& v) const {
  QVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool RowSpace::same_space(const RowSpace& other) const {
  if (dim() != other.dim()) return false;
  for (const auto& r : rows_)
    if (!other.contains(r)) return false;
  return true;
}

QVec RowSpace::reduce(QVec v) const {
  for (const auto& row : rows_) {
    std::size_t lead = 0;
    while (lead < ambient_ && row[lead] == 0) ++lead;
    if (lead == ambient_ || v[lead] == 0) continue;
    Rational f = v[lead];
    for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * row[j];
  }
  return v;
}

// ------------------------------ QPoly ------------------------------

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& QPoly::coeff(std::size_t k) const {
  static const Rational zero(0);
  return k < c_.size() ? c_[k] : zero;
}

QPoly QPoly::operator+(const QPoly& rhs) const {
  std::vector<Rational> r(std::max(c_.size(), rhs.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) r[i] += rhs.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& rhs) const {
  std::vector<Rational> r(std::max(c_.size(), rhs.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) r[i] -= rhs.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return QPoly();
  std::vector<Rational> r(c_.size() + rhs.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) r[i + j] += c_[i] * rhs.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rational& v) const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= v;
  return QPoly(std::move(r));
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QMatrix QPoly::eval(const QMatrix& a) const {
  const std::size_t n = a.rows();
  QMatrix acc(n, n);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += c_[i];
  }
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(long(i));
  return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / c_.back());
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  QPoly rem = num;
  std::vector<Rational> q(num.c_.size() > den.c_.size() - 1 ? num.c_.size() - den.c_.size() + 1 : 0,
                          Rational(0));
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    std::size_t shift = std::size_t(rem.degree() - den.degree());
    Rational f = rem.c_.back() / den.c_.back();
    q[shift] = f;
    std::vector<Rational> sub(shift + den.c_.size(), Rational(0));
    for (std::size_t i = 0; i < den.c_.size(); ++i) sub[shift + i] = den.c_[i] * f;
    rem = rem - QPoly(std::move(sub));
  }
  return {QPoly(std::move(q)), rem};
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    if (first) {
      if (a < 0) out << "-", a = -a;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0 || a != 1) out << rat_to_string(a);
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = QPoly::divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

ExtGcd poly_ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly u0 = QPoly::constant(1), u1;
  QPoly v0, v1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = QPoly::divmod(r0, r1);
    QPoly u2 = u0 - q * u1;
    QPoly v2 = v0 - q * v1;
    r0 = r1; r1 = r2;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rational lc = r0.coeffs().back();
  Rational inv = 1 / lc;
  return {r0 * inv, u0 * inv, v0 * inv};
}

QPoly squarefree_part(const QPoly& p) {
  QPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p.monic();
  return QPoly::divmod(p, g).first.monic();
}

QPoly char_poly(const QMatrix& a) {
  // Faddeev-LeVerrier: M_0 = 0, c_n = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t d = 0; d < n; ++d) m.at(d, d) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / Rational(long(k));
  }
  return QPoly(std::move(c));
}

QPoly min_poly(const QMatrix& a) {
  const std::size_t n = a.rows();
  // Find the first power of A that is a combination of the lower ones.
  std::vector<QMatrix> powers;
  powers.push_back(QMatrix::identity(n));
  for (std::size_t d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * a);
    QMatrix sys(n * n, d);
    QVec rhs(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < d; ++k) sys.at(i * n + j, k) = powers[k].at(i, j);
        rhs[i * n + j] = -powers[d].at(i, j);
      }
    auto sol = solve(sys, rhs);
    if (sol) {
      std::vector<Rational> c(d + 1, Rational(0));
      for (std::size_t k = 0; k < d; ++k) c[k] = (*sol)[k];
      c[d] = 1;
      return QPoly(std::move(c));
    }
  }
  throw std::logic_error("min_poly: no annihilator found");  // unreachable
}

// ---------------------- rational roots ----------------------

namespace {

mpz_class pollard_rho(const mpz_class& n, gmp_randstate_t state) {
  if (n % 2 == 0) return 2;
  mpz_class x, c, d;
  for (;;) {
    mpz_urandomm(x.get_mpz_t(), state, n.get_mpz_t());
    mpz_urandomm(c.get_mpz_t(), state, n.get_mpz_t());
    if (c == 0) c = 1;
    mpz_class y = x;
    d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
    if (d == n) continue;  // cycle without factor, retry with new c
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out, gmp_randstate_t state) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out[n] += 1;
    return;
  }
  mpz_class d = pollard_rho(n, state);
  factor_into(d, out, state);
  factor_into(n / d, out, state);
}

std::map<mpz_class, int> factorize(mpz_class n) {
  std::map<mpz_class, int> f;
  if (n < 0) n = -n;
  if (n <= 1) return f;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (n % p == 0) {
      f[p] += 1;
      n /= p;
    }
  }
  long p = 41;
  while (n > 1 && p < 100000 && mpz_class(p) * p <= n) {
    while (n % p == 0) {
      f[p] += 1;
      n /= p;
    }
    p += 2;
  }
  if (n > 1) {
    gmp_randstate_t state;
    gmp_randinit_default(state);
    gmp_randseed_ui(state, 0x5eedu);
    factor_into(n, f, state);
    gmp_randclear(state);
  }
  return f;
}

void divisors_upto(const std::vector<std::pair<mpz_class, int>>& f, std::size_t idx,
                   const mpz_class& acc, const mpz_class& bound, std::vector<mpz_class>& out) {
  if (acc > bound) return;
  if (idx == f.size()) {
    out.push_back(acc);
    return;
  }
  mpz_class cur = acc;
  for (int e = 0; e <= f[idx].second; ++e) {
    divisors_upto(f, idx + 1, cur, bound, out);
    cur *= f[idx].first;
    if (cur > bound) break;
  }
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const QPoly& p) {
  std::vector<std::pair<Rational, int>> roots;
  if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  QPoly q = p.monic();
  // strip x = 0 roots
  int zero_mult = 0;
  while (!q.is_zero() && q.coeff(0) == 0) {
    std::vector<Rational> shifted(q.coeffs().begin() + 1, q.coeffs().end());
    q = QPoly(std::move(shifted));
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});
  if (q.degree() <= 0) return roots;

  // Scale x = y / D with D = lcm of coefficient denominators: the result is a
  // monic integer polynomial in y, whose rational roots are integers.
  mpz_class d(1);
  for (const auto& c : q.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  const int n = q.degree();
  std::vector<mpz_class> ic(std::size_t(n) + 1);
  mpz_class dpow(1);
  for (int k = n; k >= 0; --k) {
    mpz_class num;
    Rational scaled = q.coeff(std::size_t(k)) * Rational(dpow);
    if (scaled.get_den() != 1) throw std::logic_error("scaling did not clear denominators");
    ic[std::size_t(k)] = scaled.get_num();
    dpow *= d;
  }
  // Cauchy bound on |y|: 1 + max |ic_k| (leading coefficient is 1).
  mpz_class bound(1);
  for (int k = 0; k < n; ++k) {
    mpz_class a = abs(ic[std::size_t(k)]);
    if (a > bound) bound = a;
  }
  bound += 1;

  auto fmap = factorize(ic[0]);
  std::vector<std::pair<mpz_class, int>> fvec(fmap.begin(), fmap.end());
  std::vector<mpz_class> divs;
  divisors_upto(fvec, 0, mpz_class(1), bound, divs);

  auto eval_int = [&](const mpz_class& y) {
    mpz_class acc(0);
    for (int k = n; k >= 0; --k) acc = acc * y + ic[std::size_t(k)];
    return acc;
  };
  std::vector<Rational> found;
  for (const auto& y : divs) {
    for (int sign : {1, -1}) {
      mpz_class cand = y * sign;
      if (eval_int(cand) == 0) found.push_back(Rational(cand) / Rational(d));
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const auto& r : found) {
    int mult = 0;
    QPoly lin({-r, Rational(1)});
    QPoly rest = q;
    for (;;) {
      auto [quot, rem] = QPoly::divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = quot;
      ++mult;
    }
    roots.push_back({r, mult});
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

bool is_nilpotent(const QMatrix& a) {
  QMatrix p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * a;
  }
  return p.is_zero();
}

}  // namespace contactlie
