#pragma once

#include <string>
#include <vector>

#include "contactlie/multilinear.hpp"

namespace contactlie {

struct JacobiViolation {
  int i, j, k;
  Vec residual;
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

JacobiReport check_jacobi(const Cochain2& bracket);

// Lie algebra as structure constants in a fixed basis. Jacobi is enforced at
// construction unless explicitly deferred (deliberately non-Lie tables are a
// legitimate object of study here).
class LieAlgebra {
 public:
  static LieAlgebra make(int dim, Cochain2 bracket, ScalarContext::Ptr ctx,
                         std::vector<std::string> labels = {}, bool enforce_jacobi = true);
  static LieAlgebra make_unchecked(int dim, Cochain2 bracket, ScalarContext::Ptr ctx,
                                   std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const Cochain2& bracket() const { return bracket_; }
  const ScalarContext::Ptr& context() const { return ctx_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool jacobi_checked() const { return jacobi_checked_; }

  Vec bracket_of(const Vec& x, const Vec& y) const { return bracket_.eval(x, y); }

  LieAlgebra() = default;  // empty shell; fill via make()

 private:
  int dim_ = 0;
  Cochain2 bracket_;
  ScalarContext::Ptr ctx_;
  std::vector<std::string> labels_;
  bool jacobi_checked_ = false;
};

// Subspace of Q^n spanned by parameter-free vectors, kept in echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), space_(std::size_t(ambient)) {}
  static Subspace from_generators(int ambient, const std::vector<Vec>& gens);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  std::size_t dim() const { return space_.dim(); }
  bool contains(const Vec& v) const;
  bool contains(const QVec& v) const { return space_.contains(v); }
  void insert(const Vec& v);
  bool same_space(const Subspace& other) const { return space_.same_space(other.space_); }
  std::vector<Vec> basis(ScalarContext::Ptr ctx) const;
  const RowSpace& rows() const { return space_; }

 private:
  int ambient_ = 0;
  RowSpace space_;
};

// Exact center {X : mu(X, e_j) = 0 for all j}. Requires a parameter-free bracket.
Subspace center(const LieAlgebra& g);

// Lower central series of the bracket, or of the triple bracket when extra
// brackets are supplied: the first term is generated by the values of every
// listed bilinear map, and each next term brackets V against the previous one
// with every map. Returns the descending chain [V, C^1, ...] down to
// stabilization; nilpotent exactly when the last term is zero.
std::vector<Subspace> lower_central_series(const LieAlgebra& g,
                                           const std::vector<Cochain2>& extra_brackets = {});

bool is_ideal(const LieAlgebra& g, const Subspace& s,
              const std::vector<Cochain2>& extra_brackets = {});

// Heisenberg algebra of dimension 2p+1: mu(e_2i, e_2i+1) = e_1, i = 1..p.
LieAlgebra make_heisenberg(int p);

// The 4-dimensional frobeniusian model:
// [Y1,Y2] = [Y3,Y4] = Y1, [Y2,Y3] = -1/2 Y3, [Y2,Y4] = -1/2 Y4.
LieAlgebra make_frobenius_model4();

}  // namespace contactlie
