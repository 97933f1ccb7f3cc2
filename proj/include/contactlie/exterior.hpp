#pragma once

#include <map>
#include <vector>

#include "contactlie/liealg.hpp"

namespace contactlie {

// Alternating k-form on the dual of the fixed basis; sparse over strictly
// increasing index tuples.
class KForm {
 public:
  KForm() = default;
  KForm(int dim, int degree, ScalarContext::Ptr ctx)
      : dim_(dim), degree_(degree), ctx_(std::move(ctx)) {}

  static KForm dual_basis(int i, int dim, ScalarContext::Ptr ctx);  // omega_i

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const ScalarContext::Ptr& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * omega_{idx[0]} ^ ... ^ omega_{idx[k-1]}; any index order, signed.
  void add(std::vector<int> idx, const Scalar& c);
  Scalar coeff(std::vector<int> idx) const;

  KForm operator+(const KForm& rhs) const;
  KForm operator-(const KForm& rhs) const;
  KForm scaled(const Scalar& s) const;
  bool operator==(const KForm& rhs) const;
  KForm substitute(const std::map<std::string, Scalar>& bindings) const;

  // Value on degree() many vectors (multilinear alternating expansion).
  Scalar eval(const std::vector<Vec>& args) const;

  const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }
  std::string to_string() const;

 private:
  int dim_ = 0;
  int degree_ = 0;
  ScalarContext::Ptr ctx_;
  std::map<std::vector<int>, Scalar> terms_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm wedge_power(const KForm& a, int p);

// Differential of the structural equations: on dual basis forms,
// d omega_k = sum_{i<j} C_ij^k omega_i ^ omega_j, so a catalog table reads off
// the structure constants positionally; extended to higher degrees as an
// antiderivation. d o d = 0 is exactly the Jacobi identity.
KForm d_form(const LieAlgebra& g, const KForm& alpha);

// The canonical Darboux 2-form omega_2^omega_3 + ... + omega_2p^omega_2p+1.
KForm canonical_symplectic_sum(int dim, ScalarContext::Ptr ctx);

// The scalar c with omega ^ (d omega)^p = c * omega_1^...^omega_n (n = 2p+1).
// Contact exactly when c is nonzero as a polynomial.
Scalar contact_coefficient(const LieAlgebra& g, const KForm& omega);

// The unique X with omega(X) = 1 and (d omega)(X, .) = 0. Solved by exact
// elimination with constant pivots; parametrized systems that would need a
// parameter inversion are rejected.
Vec reeb_vector(const LieAlgebra& g, const KForm& omega);

struct DSquaredFailure {
  int form_index;
  KForm residual;
};

struct DSquaredReport {
  bool ok = true;
  std::vector<DSquaredFailure> failures;
};

// d(d omega_i) = 0 for every i; equivalent to check_jacobi.
DSquaredReport check_d_squared(const LieAlgebra& g);

// True exactly when d of the dual form at omega_index equals the canonical sum.
bool is_darboux(const LieAlgebra& g, int omega_index);

}  // namespace contactlie
