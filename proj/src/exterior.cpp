#include "contactlie/exterior.hpp"

#include <algorithm>
#include <sstream>

namespace contactlie {

namespace {
// Sorts indices ascending; returns the permutation sign, 0 on repeats.
int sort_indices(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = idx.size() - 1; j >= i; --j)
      if (idx[j - 1] > idx[j]) {
        std::swap(idx[j - 1], idx[j]);
        sign = -sign;
      }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}
}  // namespace

KForm KForm::dual_basis(int i, int dim, ScalarContext::Ptr ctx) {
  KForm f(dim, 1, ctx);
  f.add({i}, Scalar::one(ctx));
  return f;
}

void KForm::add(std::vector<int> idx, const Scalar& c) {
  if (int(idx.size()) != degree_) throw DimMismatch("k-form index arity mismatch");
  for (int i : idx)
    if (i < 1 || i > dim_) throw DimMismatch("k-form index out of range");
  int sign = sort_indices(idx);
  if (sign == 0) return;
  Scalar v = sign > 0 ? c : -c;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    if (!v.is_zero()) terms_.emplace(std::move(idx), std::move(v));
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar KForm::coeff(std::vector<int> idx) const {
  int sign = sort_indices(idx);
  if (sign == 0) return Scalar::zero(ctx_);
  auto it = terms_.find(idx);
  if (it == terms_.end()) return Scalar::zero(ctx_);
  return sign > 0 ? it->second : -it->second;
}

KForm KForm::operator+(const KForm& rhs) const {
  if (dim_ != rhs.dim_ || degree_ != rhs.degree_) throw DimMismatch("k-form shape mismatch");
  KForm r = *this;
  for (const auto& [idx, c] : rhs.terms_) r.add(idx, c);
  return r;
}

KForm KForm::operator-(const KForm& rhs) const {
  if (dim_ != rhs.dim_ || degree_ != rhs.degree_) throw DimMismatch("k-form shape mismatch");
  KForm r = *this;
  for (const auto& [idx, c] : rhs.terms_) r.add(idx, -c);
  return r;
}

KForm KForm::scaled(const Scalar& s) const {
  KForm r(dim_, degree_, ctx_);
  for (const auto& [idx, c] : terms_) r.add(idx, c * s);
  return r;
}

bool KForm::operator==(const KForm& rhs) const {
  return dim_ == rhs.dim_ && degree_ == rhs.degree_ && terms_ == rhs.terms_;
}

KForm KForm::substitute(const std::map<std::string, Scalar>& bindings) const {
  KForm r(dim_, degree_, ctx_);
  for (const auto& [idx, c] : terms_) r.add(idx, c.substitute(bindings));
  return r;
}

Scalar KForm::eval(const std::vector<Vec>& args) const {
  if (int(args.size()) != degree_) throw DimMismatch("k-form eval arity mismatch");
  Scalar acc = Scalar::zero(ctx_);
  // Each term contributes c * det(minor); Leibniz expansion, degree is small.
  for (const auto& [idx, c] : terms_) {
    Scalar det = Scalar::zero(ctx_);
    std::vector<int> pos;
    for (int i = 0; i < degree_; ++i) pos.push_back(i);
    do {
      int sign = 1;
      for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = a + 1; b < pos.size(); ++b)
          if (pos[a] > pos[b]) sign = -sign;
      Scalar prod = Scalar::one(ctx_);
      for (int a = 0; a < degree_; ++a)
        prod *= args[std::size_t(a)][idx[std::size_t(pos[std::size_t(a)])]];
      det = sign > 0 ? det + prod : det - prod;
    } while (std::next_permutation(pos.begin(), pos.end()));
    acc += c * det;
  }
  return acc;
}

std::string KForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*";
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out << "^";
      out << "w" << idx[i];
    }
  }
  return out.str();
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw DimMismatch("wedge dimension mismatch");
  KForm r(a.dim(), a.degree() + b.degree(), a.context());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add(std::move(idx), ca * cb);
    }
  return r;
}

KForm wedge_power(const KForm& a, int p) {
  KForm acc(a.dim(), 0, a.context());
  acc.add({}, Scalar::one(a.context()));
  for (int i = 0; i < p; ++i) acc = wedge(acc, a);
  return acc;
}

namespace {
// d omega_k as a 2-form, positional in the structure constants.
KForm d_dual(const LieAlgebra& g, int k) {
  KForm f(g.dim(), 2, g.context());
  for (const auto& [key, c] : g.bracket().entries())
    if (key[2] == k) f.add({key[0], key[1]}, c);
  return f;
}
}  // namespace

KForm d_form(const LieAlgebra& g, const KForm& alpha) {
  if (alpha.dim() != g.dim()) throw DimMismatch("d_form dimension mismatch");
  KForm out(g.dim(), alpha.degree() + 1, g.context());
  if (alpha.degree() == 0) return out;
  for (const auto& [idx, c] : alpha.terms()) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      KForm di = d_dual(g, idx[t]);
      // (-1)^t * omega_{i_0} ^ ... ^ d omega_{i_t} ^ ... (antiderivation)
      int sign = (t % 2 == 0) ? 1 : -1;
      for (const auto& [pair_idx, pc] : di.terms()) {
        std::vector<int> full;
        full.reserve(idx.size() + 1);
        for (std::size_t s = 0; s < t; ++s) full.push_back(idx[s]);
        full.push_back(pair_idx[0]);
        full.push_back(pair_idx[1]);
        for (std::size_t s = t + 1; s < idx.size(); ++s) full.push_back(idx[s]);
        out.add(std::move(full), sign > 0 ? c * pc : -(c * pc));
      }
    }
  }
  return out;
}

KForm canonical_symplectic_sum(int dim, ScalarContext::Ptr ctx) {
  KForm f(dim, 2, ctx);
  for (int i = 2; i + 1 <= dim; i += 2) f.add({i, i + 1}, Scalar::one(ctx));
  return f;
}

Scalar contact_coefficient(const LieAlgebra& g, const KForm& omega) {
  const int n = g.dim();
  if (n % 2 == 0) throw ScalarError("contact_coefficient needs odd dimension");
  if (omega.degree() != 1) throw DimMismatch("contact form must have degree 1");
  const int p = (n - 1) / 2;
  KForm volume_candidate = wedge(omega, wedge_power(d_form(g, omega), p));
  std::vector<int> top;
  for (int i = 1; i <= n; ++i) top.push_back(i);
  return volume_candidate.coeff(top);
}

Vec reeb_vector(const LieAlgebra& g, const KForm& omega) {
  const int n = g.dim();
  KForm domega = d_form(g, omega);
  // Unknowns x_1..x_n; rows: omega(X) = 1, then domega(X, e_j) = 0 for each j.
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  {
    std::vector<Scalar> row(std::size_t(n), Scalar::zero(g.context()));
    for (int i = 1; i <= n; ++i) row[std::size_t(i - 1)] = omega.coeff({i});
    rows.push_back(std::move(row));
    rhs.push_back(Scalar::one(g.context()));
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<Scalar> row(std::size_t(n), Scalar::zero(g.context()));
    for (int i = 1; i <= n; ++i) row[std::size_t(i - 1)] = domega.coeff({i, j});
    rows.push_back(std::move(row));
    rhs.push_back(Scalar::zero(g.context()));
  }
  // Gaussian elimination restricted to nonzero constant pivots.
  const std::size_t m = rows.size();
  std::vector<bool> used_row(m, false);
  std::vector<int> pivot_row_of_col(std::size_t(n), -1);
  for (int col = 0; col < n; ++col) {
    std::size_t r = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (used_row[i]) continue;
      auto v = rows[i][std::size_t(col)].as_rational();
      if (v && *v != 0) {
        r = i;
        break;
      }
    }
    if (r == m) continue;
    used_row[r] = true;
    pivot_row_of_col[std::size_t(col)] = int(r);
    Rational inv = 1 / *rows[r][std::size_t(col)].as_rational();
    for (int c = 0; c < n; ++c) rows[r][std::size_t(c)] *= Scalar::constant(inv, g.context());
    rhs[r] *= Scalar::constant(inv, g.context());
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][std::size_t(col)].is_zero()) continue;
      Scalar f = rows[i][std::size_t(col)];
      for (int c = 0; c < n; ++c) rows[i][std::size_t(c)] -= f * rows[r][std::size_t(c)];
      rhs[i] -= f * rhs[r];
    }
  }
  for (int col = 0; col < n; ++col)
    if (pivot_row_of_col[std::size_t(col)] < 0)
      throw ScalarError("not a contact form: Reeb system has no unique solution");
  for (std::size_t i = 0; i < m; ++i) {
    if (used_row[i]) continue;
    bool all_zero = std::all_of(rows[i].begin(), rows[i].end(),
                                [](const Scalar& s) { return s.is_zero(); });
    if (all_zero && !rhs[i].is_zero())
      throw ScalarError("not a contact form: Reeb system inconsistent");
    if (!all_zero)
      throw ScalarError("Reeb system not solvable without parameter inversion");
  }
  Vec x(n, g.context());
  for (int col = 1; col <= n; ++col) x[col] = rhs[std::size_t(pivot_row_of_col[std::size_t(col - 1)])];
  // Recheck the defining equations exactly.
  std::vector<Vec> one_arg{x};
  if (omega.eval(one_arg) != Scalar::one(g.context()))
    throw ScalarError("Reeb solution fails omega(X) = 1");
  for (int j = 1; j <= n; ++j) {
    std::vector<Vec> args{x, Vec::basis(j, n, g.context())};
    if (!d_form(g, omega).eval(args).is_zero())
      throw ScalarError("Reeb solution fails i(X) d omega = 0");
  }
  return x;
}

DSquaredReport check_d_squared(const LieAlgebra& g) {
  DSquaredReport report;
  for (int k = 1; k <= g.dim(); ++k) {
    KForm dd = d_form(g, d_form(g, KForm::dual_basis(k, g.dim(), g.context())));
    if (!dd.is_zero()) {
      report.ok = false;
      report.failures.push_back({k, dd});
    }
  }
  return report;
}

bool is_darboux(const LieAlgebra& g, int omega_index) {
  if (g.dim() % 2 == 0) return false;
  KForm d1 = d_form(g, KForm::dual_basis(omega_index, g.dim(), g.context()));
  return d1 == canonical_symplectic_sum(g.dim(), g.context());
}

}  // namespace contactlie
