#include "contactlie/liealg.hpp"

#include <sstream>

namespace contactlie {

JacobiReport check_jacobi(const Cochain2& bracket) {
  JacobiReport report;
  Cochain3 jac = comp_product(bracket, bracket);
  if (jac.is_zero()) return report;
  report.ok = false;
  const int n = bracket.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Vec v = jac.value_vec(i, j, k);
        if (!v.is_zero()) report.violations.push_back({i, j, k, v});
      }
  return report;
}

LieAlgebra LieAlgebra::make(int dim, Cochain2 bracket, ScalarContext::Ptr ctx,
                            std::vector<std::string> labels, bool enforce_jacobi) {
  if (bracket.dim() != dim) throw DimMismatch("bracket dimension mismatch");
  if (labels.empty())
    for (int i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
  if (int(labels.size()) != dim) throw DimMismatch("label count mismatch");
  LieAlgebra g;
  g.dim_ = dim;
  g.bracket_ = std::move(bracket);
  g.ctx_ = std::move(ctx);
  g.labels_ = std::move(labels);
  if (enforce_jacobi) {
    JacobiReport r = check_jacobi(g.bracket_);
    if (!r.ok) {
      std::ostringstream msg;
      msg << "Jacobi identity fails at (" << r.violations[0].i << "," << r.violations[0].j << ","
          << r.violations[0].k << "): " << r.violations[0].residual.to_string();
      throw ScalarError(msg.str());
    }
    g.jacobi_checked_ = true;
  }
  return g;
}

LieAlgebra LieAlgebra::make_unchecked(int dim, Cochain2 bracket, ScalarContext::Ptr ctx,
                                      std::vector<std::string> labels) {
  return make(dim, std::move(bracket), std::move(ctx), std::move(labels), false);
}

Subspace Subspace::from_generators(int ambient, const std::vector<Vec>& gens) {
  Subspace s(ambient);
  for (const auto& g : gens) s.insert(g);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  for (int i = 0; i < ambient; ++i) {
    QVec v(std::size_t(ambient), Rational(0));
    v[std::size_t(i)] = 1;
    s.space_.insert(v);
  }
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (!v.is_numeric()) throw ScalarError("subspace operations need parameter-free vectors");
  return space_.contains(v.to_qvec());
}

void Subspace::insert(const Vec& v) {
  if (!v.is_numeric()) throw ScalarError("subspace operations need parameter-free vectors");
  space_.insert(v.to_qvec());
}

std::vector<Vec> Subspace::basis(ScalarContext::Ptr ctx) const {
  std::vector<Vec> out;
  for (const auto& row : space_.basis()) out.push_back(Vec::from_qvec(row, ctx));
  return out;
}

Subspace center(const LieAlgebra& g) {
  if (!g.bracket().is_numeric())
    throw ScalarError("center: parametrized bracket; substitute values first");
  const int n = g.dim();
  // Stack the systems mu(X, e_j) = 0 over j: rows indexed by (j, output k).
  QMatrix m(std::size_t(n) * std::size_t(n), std::size_t(n));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      // column i: coefficient of x_i in mu(e_i, e_j)
      for (const auto& [k, c] : g.bracket().value(i, j))
        m.at(std::size_t(j - 1) * n + std::size_t(k - 1), std::size_t(i - 1)) =
            c.constant_value();
    }
  Subspace s(n);
  for (const auto& v : kernel_basis(m)) s.insert(Vec::from_qvec(v, g.context()));
  return s;
}

namespace {

void require_numeric(const LieAlgebra& g, const std::vector<Cochain2>& extra) {
  if (!g.bracket().is_numeric())
    throw ScalarError("parametrized bracket; substitute values first");
  for (const auto& b : extra)
    if (!b.is_numeric()) throw ScalarError("parametrized bracket; substitute values first");
}

std::vector<const Cochain2*> all_brackets(const LieAlgebra& g,
                                          const std::vector<Cochain2>& extra) {
  std::vector<const Cochain2*> out{&g.bracket()};
  for (const auto& b : extra) out.push_back(&b);
  return out;
}

}  // namespace

std::vector<Subspace> lower_central_series(const LieAlgebra& g,
                                           const std::vector<Cochain2>& extra_brackets) {
  require_numeric(g, extra_brackets);
  auto brackets = all_brackets(g, extra_brackets);
  const int n = g.dim();
  std::vector<Subspace> chain{Subspace::full(n)};
  for (;;) {
    const Subspace& prev = chain.back();
    Subspace next(n);
    for (const Cochain2* b : brackets)
      for (int i = 1; i <= n; ++i)
        for (const auto& w : prev.basis(g.context())) {
          Vec ei = Vec::basis(i, n, g.context());
          next.insert(b->eval(ei, w));
        }
    if (next.same_space(prev)) break;  // stabilized without reaching zero
    chain.push_back(next);
    if (chain.back().dim() == 0) break;
  }
  return chain;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s, const std::vector<Cochain2>& extra_brackets) {
  require_numeric(g, extra_brackets);
  auto brackets = all_brackets(g, extra_brackets);
  const int n = g.dim();
  for (const Cochain2* b : brackets)
    for (int i = 1; i <= n; ++i)
      for (const auto& w : s.basis(g.context())) {
        Vec ei = Vec::basis(i, n, g.context());
        if (!s.contains(b->eval(ei, w))) return false;
      }
  return true;
}

LieAlgebra make_heisenberg(int p) {
  if (p < 1) throw ScalarError("make_heisenberg: p must be >= 1");
  auto ctx = ScalarContext::make();
  const int n = 2 * p + 1;
  Cochain2 mu(n, ctx);
  for (int i = 1; i <= p; ++i) mu.add(2 * i, 2 * i + 1, 1, Scalar::one(ctx));
  return LieAlgebra::make(n, std::move(mu), ctx);
}

LieAlgebra make_frobenius_model4() {
  auto ctx = ScalarContext::make();
  Cochain2 mu(4, ctx);
  mu.add(1, 2, 1, Scalar::one(ctx));
  mu.add(3, 4, 1, Scalar::one(ctx));
  mu.add(2, 3, 3, Scalar::constant(rat(-1, 2), ctx));
  mu.add(2, 4, 4, Scalar::constant(rat(-1, 2), ctx));
  return LieAlgebra::make(4, std::move(mu), ctx,
                          {"Y1", "Y2", "Y3", "Y4"});
}

}  // namespace contactlie
