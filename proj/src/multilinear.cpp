#include "contactlie/multilinear.hpp"

#include <algorithm>
#include <sstream>

namespace contactlie {

Vec Vec::basis(int i, int dim, ScalarContext::Ptr ctx) {
  Vec v(dim, ctx);
  v[i] = Scalar::one(ctx);
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec Vec::operator+(const Vec& rhs) const {
  if (dim != rhs.dim) throw DimMismatch("vector dimension mismatch");
  Vec r = *this;
  for (int i = 0; i < dim; ++i) r.c[std::size_t(i)] += rhs.c[std::size_t(i)];
  return r;
}

Vec Vec::operator-(const Vec& rhs) const {
  if (dim != rhs.dim) throw DimMismatch("vector dimension mismatch");
  Vec r = *this;
  for (int i = 0; i < dim; ++i) r.c[std::size_t(i)] -= rhs.c[std::size_t(i)];
  return r;
}

Vec Vec::scaled(const Scalar& s) const {
  Vec r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

std::string Vec::to_string(const std::vector<std::string>* labels) const {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= dim; ++i) {
    const Scalar& s = (*this)[i];
    if (s.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    std::string label = labels ? (*labels)[std::size_t(i - 1)] : "e" + std::to_string(i);
    out << "(" << s.to_string() << ")*" << label;
  }
  if (first) out << "0";
  return out.str();
}

bool Vec::is_numeric() const {
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_constant(); });
}

QVec Vec::to_qvec() const {
  QVec v(std::size_t(dim), Rational(0));
  for (int i = 0; i < dim; ++i) v[std::size_t(i)] = c[std::size_t(i)].constant_value();
  return v;
}

Vec Vec::from_qvec(const QVec& v, ScalarContext::Ptr ctx) {
  Vec r(int(v.size()), ctx);
  for (std::size_t i = 0; i < v.size(); ++i) r.c[i] = Scalar::constant(v[i], ctx);
  return r;
}

Endo Endo::identity(int d, ScalarContext::Ptr ctx) {
  Endo e(d, ctx);
  for (int i = 1; i <= d; ++i) e.at(i, i) = Scalar::one(ctx);
  return e;
}

Vec Endo::apply(const Vec& v) const {
  if (v.dim != dim) throw DimMismatch("endo/vector dimension mismatch");
  Vec r(dim, v.c.empty() ? ScalarContext::make() : v.c[0].context());
  for (int i = 1; i <= dim; ++i) {
    Scalar acc = Scalar::zero(r.c[0].context());
    for (int j = 1; j <= dim; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero() || v[j].is_zero()) continue;
      acc += a * v[j];
    }
    r[i] = acc;
  }
  return r;
}

Vec Endo::column(int j) const {
  Vec r(dim, entries[0].context());
  for (int i = 1; i <= dim; ++i) r[i] = at(i, j);
  return r;
}

Endo Endo::operator+(const Endo& rhs) const {
  Endo r = *this;
  for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] += rhs.entries[i];
  return r;
}

Endo Endo::operator-(const Endo& rhs) const {
  Endo r = *this;
  for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] -= rhs.entries[i];
  return r;
}

Endo Endo::operator*(const Endo& rhs) const {
  if (dim != rhs.dim) throw DimMismatch("endo product dimension mismatch");
  Endo r(dim, entries[0].context());
  for (int i = 1; i <= dim; ++i)
    for (int k = 1; k <= dim; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 1; j <= dim; ++j) {
        const Scalar& b = rhs.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

bool Endo::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar Endo::trace() const {
  Scalar t = Scalar::zero(entries[0].context());
  for (int i = 1; i <= dim; ++i) t += at(i, i);
  return t;
}

Endo Endo::transposed() const {
  Endo r(dim, entries[0].context());
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Endo::is_numeric() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Scalar& s) { return s.is_constant(); });
}

QMatrix Endo::to_qmatrix() const {
  QMatrix m{std::size_t(dim), std::size_t(dim)};
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) m.at(std::size_t(i - 1), std::size_t(j - 1)) = at(i, j).constant_value();
  return m;
}

Endo Endo::from_qmatrix(const QMatrix& m, ScalarContext::Ptr ctx) {
  Endo e(int(m.rows()), ctx);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e.at(int(i + 1), int(j + 1)) = Scalar::constant(m.at(i, j), ctx);
  return e;
}

// ------------------------------ Cochain2 ------------------------------

void Cochain2::add(int i, int j, int k, const Scalar& c) {
  if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
    throw DimMismatch("cochain2 index out of range");
  if (i == j) {
    if (!c.is_zero()) throw ScalarError("cochain2: value on (e_i, e_i) must be zero");
    return;
  }
  Scalar v = c;
  int a = i, b = j;
  if (a > b) {
    std::swap(a, b);
    v = -v;
  }
  std::array<int, 3> key{a, b, k};
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (!v.is_zero()) entries_.emplace(key, std::move(v));
  } else {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void Cochain2::set(int i, int j, int k, const Scalar& c) {
  int a = i, b = j;
  Scalar v = c;
  if (a > b) {
    std::swap(a, b);
    v = -v;
  }
  entries_.erase({a, b, k});
  add(a, b, k, v);
}

Scalar Cochain2::coeff(int i, int j, int k) const {
  if (i == j) return Scalar::zero(ctx_);
  bool flip = i > j;
  auto it = entries_.find({flip ? j : i, flip ? i : j, k});
  if (it == entries_.end()) return Scalar::zero(ctx_);
  return flip ? -it->second : it->second;
}

std::vector<std::pair<int, Scalar>> Cochain2::value(int i, int j) const {
  std::vector<std::pair<int, Scalar>> out;
  if (i == j) return out;
  bool flip = i > j;
  int a = flip ? j : i, b = flip ? i : j;
  auto it = entries_.lower_bound({a, b, 0});
  for (; it != entries_.end() && it->first[0] == a && it->first[1] == b; ++it)
    out.emplace_back(it->first[2], flip ? -it->second : it->second);
  return out;
}

Vec Cochain2::value_vec(int i, int j) const {
  Vec v(dim_, ctx_);
  for (auto& [k, c] : value(i, j)) v[k] += c;
  return v;
}

Vec Cochain2::eval(const Vec& x, const Vec& y) const {
  if (x.dim != dim_ || y.dim != dim_) throw DimMismatch("cochain2 eval dimension mismatch");
  Vec r(dim_, ctx_);
  for (const auto& [key, c] : entries_) {
    const auto [i, j, k] = key;
    // value on (x, y) of the elementary alternating piece c * (w_i ^ w_j) e_k
    Scalar s = x[i] * y[j] - x[j] * y[i];
    if (s.is_zero()) continue;
    r[k] += c * s;
  }
  return r;
}

Cochain2 Cochain2::operator+(const Cochain2& rhs) const {
  Cochain2 r = *this;
  for (const auto& [key, c] : rhs.entries_) r.add(key[0], key[1], key[2], c);
  return r;
}

Cochain2 Cochain2::operator-(const Cochain2& rhs) const {
  Cochain2 r = *this;
  for (const auto& [key, c] : rhs.entries_) r.add(key[0], key[1], key[2], -c);
  return r;
}

Cochain2 Cochain2::scaled(const Scalar& s) const {
  Cochain2 r(dim_, ctx_);
  for (const auto& [key, c] : entries_) r.add(key[0], key[1], key[2], c * s);
  return r;
}

bool Cochain2::operator==(const Cochain2& rhs) const {
  return dim_ == rhs.dim_ && entries_ == rhs.entries_;
}

Cochain2 Cochain2::substitute(const std::map<std::string, Scalar>& bindings) const {
  Cochain2 r(dim_, ctx_);
  for (const auto& [key, c] : entries_) r.add(key[0], key[1], key[2], c.substitute(bindings));
  return r;
}

bool Cochain2::is_numeric() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.second.is_constant(); });
}

std::string Cochain2::to_string(const std::vector<std::string>* labels) const {
  std::ostringstream out;
  auto name = [&](int i) {
    return labels ? (*labels)[std::size_t(i - 1)] : "e" + std::to_string(i);
  };
  std::array<int, 2> last{0, 0};
  bool any = false;
  for (const auto& [key, c] : entries_) {
    if (std::array<int, 2>{key[0], key[1]} != last) {
      if (any) out << "\n";
      out << "[" << name(key[0]) << "," << name(key[1]) << "] = ";
      out << value_vec(key[0], key[1]).to_string(labels);
      last = {key[0], key[1]};
      any = true;
    }
  }
  if (!any) out << "0";
  return out.str();
}

// ------------------------------ Cochain3 ------------------------------

namespace {
// Sorts three indices; returns permutation sign, 0 if repeated.
int sort3(int& i, int& j, int& k) {
  int sign = 1;
  if (i > j) { std::swap(i, j); sign = -sign; }
  if (j > k) { std::swap(j, k); sign = -sign; }
  if (i > j) { std::swap(i, j); sign = -sign; }
  if (i == j || j == k) return 0;
  return sign;
}
}  // namespace

void Cochain3::add(int i, int j, int k, int l, const Scalar& c) {
  if (i < 1 || j < 1 || k < 1 || l < 1 || i > dim_ || j > dim_ || k > dim_ || l > dim_)
    throw DimMismatch("cochain3 index out of range");
  int a = i, b = j, d = k;
  int sign = sort3(a, b, d);
  if (sign == 0) {
    if (!c.is_zero()) throw ScalarError("cochain3: value on repeated indices must be zero");
    return;
  }
  Scalar v = sign > 0 ? c : -c;
  std::array<int, 4> key{a, b, d, l};
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (!v.is_zero()) entries_.emplace(key, std::move(v));
  } else {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Scalar Cochain3::coeff(int i, int j, int k, int l) const {
  int a = i, b = j, d = k;
  int sign = sort3(a, b, d);
  if (sign == 0) return Scalar::zero(ctx_);
  auto it = entries_.find({a, b, d, l});
  if (it == entries_.end()) return Scalar::zero(ctx_);
  return sign > 0 ? it->second : -it->second;
}

Vec Cochain3::value_vec(int i, int j, int k) const {
  Vec v(dim_, ctx_);
  for (int l = 1; l <= dim_; ++l) {
    Scalar c = coeff(i, j, k, l);
    if (!c.is_zero()) v[l] += c;
  }
  return v;
}

Vec Cochain3::eval(const Vec& x, const Vec& y, const Vec& z) const {
  Vec r(dim_, ctx_);
  for (const auto& [key, c] : entries_) {
    const int i = key[0], j = key[1], k = key[2], l = key[3];
    // det of the 3x3 coordinate minor: alternating expansion
    Scalar s = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
               x[k] * (y[i] * z[j] - y[j] * z[i]);
    if (s.is_zero()) continue;
    r[l] += c * s;
  }
  return r;
}

Cochain3 Cochain3::operator+(const Cochain3& rhs) const {
  Cochain3 r = *this;
  for (const auto& [key, c] : rhs.entries_) r.add(key[0], key[1], key[2], key[3], c);
  return r;
}

Cochain3 Cochain3::operator-(const Cochain3& rhs) const {
  Cochain3 r = *this;
  for (const auto& [key, c] : rhs.entries_) r.add(key[0], key[1], key[2], key[3], -c);
  return r;
}

Cochain3 Cochain3::scaled(const Scalar& s) const {
  Cochain3 r(dim_, ctx_);
  for (const auto& [key, c] : entries_) r.add(key[0], key[1], key[2], key[3], c * s);
  return r;
}

bool Cochain3::operator==(const Cochain3& rhs) const {
  return dim_ == rhs.dim_ && entries_ == rhs.entries_;
}

Cochain3 Cochain3::substitute(const std::map<std::string, Scalar>& bindings) const {
  Cochain3 r(dim_, ctx_);
  for (const auto& [key, c] : entries_)
    r.add(key[0], key[1], key[2], key[3], c.substitute(bindings));
  return r;
}

bool Cochain3::is_numeric() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.second.is_constant(); });
}

std::string Cochain3::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : entries_) {
    if (!first) out << ", ";
    first = false;
    out << "(" << key[0] << "," << key[1] << "," << key[2] << ")->"
        << "(" << c.to_string() << ")*e" << key[3];
  }
  if (first) out << "0";
  return out.str();
}

// --------------------------- operations ---------------------------

Cochain3 comp_product(const Cochain2& phi, const Cochain2& psi) {
  if (phi.dim() != psi.dim()) throw DimMismatch("comp_product dimension mismatch");
  if (!contexts_compatible(phi.context(), psi.context()))
    throw ScalarError("comp_product context mismatch");
  const int n = phi.dim();
  Cochain3 out(n, phi.context());
  // phi(psi(e_a, e_b), e_c) summed cyclically over (a,b,c), a<b<c.
  auto add_term = [&](int a, int b, int c) {
    for (const auto& [m, cm] : psi.value(a, b)) {
      for (const auto& [l, cl] : phi.value(m, c)) out.add(a, b, c, l, cm * cl);
    }
  };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        add_term(a, b, c);  // phi(psi(a,b),c)
        // cyclic: phi(psi(b,c),a) contributes at sorted key (a,b,c) with the
        // sign of the cycle, which is +1; same for phi(psi(c,a),b).
        for (const auto& [m, cm] : psi.value(b, c))
          for (const auto& [l, cl] : phi.value(m, a)) out.add(b, c, a, l, cm * cl);
        for (const auto& [m, cm] : psi.value(c, a))
          for (const auto& [l, cl] : phi.value(m, b)) out.add(c, a, b, l, cm * cl);
      }
  return out;
}

Cochain3 coboundary2(const Cochain2& mu, const Cochain2& phi) {
  return comp_product(mu, phi) + comp_product(phi, mu);
}

Cochain2 coboundary1(const Cochain2& mu, const Endo& g) {
  if (mu.dim() != g.dim) throw DimMismatch("coboundary1 dimension mismatch");
  const int n = mu.dim();
  Cochain2 out(n, mu.context());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec gi = g.column(i), gj = g.column(j);
      Vec v(n, mu.context());
      // mu(g e_i, e_j)
      for (int m = 1; m <= n; ++m) {
        if (!gi[m].is_zero())
          for (const auto& [l, c] : mu.value(m, j)) v[l] += gi[m] * c;
        if (!gj[m].is_zero())
          for (const auto& [l, c] : mu.value(i, m)) v[l] += gj[m] * c;
      }
      // - g(mu(e_i, e_j))
      for (const auto& [m, c] : mu.value(i, j)) {
        Vec gm = g.column(m);
        for (int l = 1; l <= n; ++l)
          if (!gm[l].is_zero()) v[l] -= c * gm[l];
      }
      for (int l = 1; l <= n; ++l)
        if (!v[l].is_zero()) out.add(i, j, l, v[l]);
    }
  return out;
}

std::vector<std::array<int, 3>> cochain2_coords(int dim) {
  std::vector<std::array<int, 3>> coords;
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j)
      for (int k = 1; k <= dim; ++k) coords.push_back({i, j, k});
  return coords;
}

std::vector<std::array<int, 4>> cochain3_coords(int dim) {
  std::vector<std::array<int, 4>> coords;
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j)
      for (int k = j + 1; k <= dim; ++k)
        for (int l = 1; l <= dim; ++l) coords.push_back({i, j, k, l});
  return coords;
}

QVec flatten2(const Cochain2& c, const std::vector<std::array<int, 3>>& coords) {
  QVec v(coords.size(), Rational(0));
  for (std::size_t t = 0; t < coords.size(); ++t)
    v[t] = c.coeff(coords[t][0], coords[t][1], coords[t][2]).constant_value();
  return v;
}

QVec flatten3(const Cochain3& c, const std::vector<std::array<int, 4>>& coords) {
  QVec v(coords.size(), Rational(0));
  for (std::size_t t = 0; t < coords.size(); ++t)
    v[t] = c.coeff(coords[t][0], coords[t][1], coords[t][2], coords[t][3]).constant_value();
  return v;
}

Cochain2 unflatten2(const QVec& v, int dim, const std::vector<std::array<int, 3>>& coords,
                    ScalarContext::Ptr ctx) {
  Cochain2 c(dim, ctx);
  for (std::size_t t = 0; t < coords.size(); ++t)
    if (v[t] != 0) c.add(coords[t][0], coords[t][1], coords[t][2], Scalar::constant(v[t], ctx));
  return c;
}

std::optional<Cochain2> solve_coboundary_membership(const Cochain2& mu, const Cochain3& target) {
  if (mu.dim() != target.dim()) throw DimMismatch("membership dimension mismatch");
  if (!mu.is_numeric())
    throw ScalarError("parameter-dependent solvability: mu must be parameter-free");
  const int n = mu.dim();
  auto dom = cochain2_coords(n);
  auto cod = cochain3_coords(n);
  // Columns of delta_mu in the flat coordinates.
  QMatrix m(cod.size(), dom.size());
  for (std::size_t col = 0; col < dom.size(); ++col) {
    Cochain2 basis(n, mu.context());
    basis.add(dom[col][0], dom[col][1], dom[col][2], Scalar::one(mu.context()));
    Cochain3 image = coboundary2(mu, basis);
    for (std::size_t row = 0; row < cod.size(); ++row)
      m.at(row, col) =
          image.coeff(cod[row][0], cod[row][1], cod[row][2], cod[row][3]).constant_value();
  }
  // Decompose the target by monomial; delta_mu acts coefficient-wise.
  std::map<Monomial, QVec> by_monomial;
  for (const auto& [key, c] : target.entries()) {
    std::size_t row = 0;
    for (; row < cod.size(); ++row)
      if (cod[row] == key) break;
    for (const auto& [mono, coeff] : c.terms()) {
      auto it = by_monomial.find(mono);
      if (it == by_monomial.end())
        it = by_monomial.emplace(mono, QVec(cod.size(), Rational(0))).first;
      it->second[row] += coeff;
    }
  }
  Cochain2 result(n, target.context());
  if (by_monomial.empty()) return result;  // zero target: X = 0
  for (const auto& [mono, rhs] : by_monomial) {
    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    // rebuild the monomial as a scalar
    Scalar ms(target.context());
    ms.add_term(mono, Rational(1));
    ms.normalize();
    for (std::size_t col = 0; col < dom.size(); ++col)
      if ((*sol)[col] != 0)
        result.add(dom[col][0], dom[col][1], dom[col][2],
                   ms * Scalar::constant((*sol)[col], target.context()));
  }
  return result;
}

}  // namespace contactlie
