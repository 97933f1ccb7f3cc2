#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contactlie/liealg.hpp"

namespace contactlie {

// Quadruplet (V, mu0, phi1, phi2). The axioms
//   delta_mu0 phi1 = 0,
//   phi1 o phi1 + delta_mu0 phi2 = 0,
//   delta_phi2 phi1 = 0
// say exactly that mu0 + t phi1 + t^2 phi2 is a Lie bracket for formal t.
struct TwoCompatible {
  int dim = 0;
  Cochain2 mu0, phi1, phi2;
  ScalarContext::Ptr ctx;
};

struct AxiomReport {
  bool ok = true;
  Cochain3 res_cocycle;     // delta_mu0 phi1
  Cochain3 res_quadratic;   // phi1 o phi1 + delta_mu0 phi2
  Cochain3 res_mixed;       // delta_phi2 phi1
};

AxiomReport verify_axioms(const TwoCompatible& t);

// The full graded system of the quadratic deformation:
//   (2) delta_mu phi1 = 0
//   (3) phi1 o phi1 + delta_mu phi2 = 0
//   (4) phi1 o phi2 + phi2 o phi1 = 0
//   (5) phi2 o phi2 = 0
// plus the assembled bracket mu0 + phi1 + phi2 passing the Jacobi test.
struct FullSystemReport {
  bool ok = true;
  Cochain3 eq2, eq3, eq4, eq5;
  bool assembled_jacobi_ok = true;
};

FullSystemReport verify_full_system(const TwoCompatible& t);

// Assembles mu0 + phi1 + phi2 into one bracket.
Cochain2 assemble(const TwoCompatible& t);

// Decomposition of a contact Lie algebra in a Darboux basis:
// mu0 is the Heisenberg bracket, phi1 the part of [V2,V2] valued in V2,
// phi2 the brackets of e_1, f(e_i) = phi2(e_1, e_i) on V2 = span(e_2..e_2p+1).
struct ContactDecomposition {
  int dim = 0;           // 2p+1
  int p = 0;
  TwoCompatible parts;
  Endo f;                // 2p x 2p, acting on V2
  std::optional<Endo> f_s, f_n;  // filled by decompose_f for numeric f
  // declared or computed spectrum of f as (eigenvalue, multiplicity)
  std::vector<std::pair<Scalar, int>> spectrum;
};

// Requires is_darboux(g, darboux_first_index); only index 1 is supported
// since the catalog normalizes the contact form to omega_1.
ContactDecomposition decompose_contact(const LieAlgebra& g, int darboux_first_index = 1);

// Extends an endomorphism of V2 to V by zero on e_1.
Endo extend_by_zero(const Endo& f_on_v2, int dim, ScalarContext::Ptr ctx);

// Membership of f in r_p via the Theta condition (and the block shape).
bool check_f_membership(const Endo& f, int p);

// Jordan-Chevalley decomposition over Q by the Newton iteration on the
// squarefree part q of the characteristic polynomial: with v = (q')^{-1} mod q
// from the extended gcd, iterate x -> x - q(x) v(x). Terminates in at most
// ceil(log2 dim) + 1 steps with q(x) = 0; then x is the semisimple part.
std::pair<QMatrix, QMatrix> jordan_chevalley(const QMatrix& f);
// Scalar wrapper; entries must be parameter-free.
std::pair<Endo, Endo> jordan_chevalley(const Endo& f);

// Independent route for cross-checking: when the characteristic polynomial
// splits over Q, build f_s from the generalized eigenspace decomposition.
// Returns nothing when the polynomial does not split (no rational certificate).
std::optional<QMatrix> jordan_chevalley_split_oracle(const QMatrix& f);

struct DerivationReport {
  bool ok = true;
  bool f_is_derivation = false;
  std::optional<bool> fs_is_derivation, fn_is_derivation;  // when numeric
};

// f (extended by zero on e_1) as a derivation of (V, phi1); for numeric f the
// semisimple and nilpotent parts are checked too.
DerivationReport check_derivation_of_phi1(const ContactDecomposition& d);

struct SingularityReport {
  bool ok = true;                    // bounds hold (p >= 2) or not applicable
  std::optional<Rational> det_f;     // numeric case
  std::optional<Scalar> det_f_poly;  // symbolic case
  std::optional<std::size_t> rank_f;
  std::optional<std::size_t> rank_fs;
  std::string note;
};

// det f = 0 and rk(f_s) <= 2p-2 for p >= 2; symbolic f gets its determinant
// polynomial reported with a generic-vanishing note instead.
SingularityReport check_f_singular(const ContactDecomposition& d);

// Root data of a diagonalizable f under the standing diagonal-section
// hypothesis: nonzero eigenvalues simple, 0 of multiplicity exactly 2.
struct RootData {
  std::vector<Scalar> pair_eigenvalues;       // one representative per (l, -l) pair
  std::vector<std::array<int, 3>> relations;  // indices (i,j,k): s_i l_i + s_j l_j = s_k l_k
  std::vector<std::array<int, 3>> relation_signs;
  std::size_t relation_rank = 0;
  std::size_t rank = 0;  // #pairs - relation_rank
};

// Spectrum given as (eigenvalue, multiplicity); eigenvalues may be symbolic.
RootData compute_rank(const std::vector<std::pair<Scalar, int>>& spectrum,
                      ScalarContext::Ptr ctx);
RootData compute_rank(const ContactDecomposition& d);

struct Degree3Report {
  bool ok = true;
  int tuples_checked = 0;
};

// The degree-3 identity satisfied by phi1 on V2:
// -phi1ophi1(x,y,phi1(z,v)) + phi1(phi1ophi1(x,y,z),v) - phi1(phi1ophi1(x,y,v),z),
// verified exactly against the symplectic boundary terms its derivation
// discards (zero on generic slots; see the implementation note).
Degree3Report check_phi1_degree3_identity(const ContactDecomposition& d);

struct LieModuloReport {
  bool cocycle_ok = false;          // delta_mu0 phi1 = 0
  bool phi1_is_coboundary = false;  // reported, not asserted
  bool square_in_b3 = false;        // phi1 o phi1 in B^3(mu0, mu0)
};

// phi1 as a Lie algebra modulo mu0: cocycle, the B^2 class (reported), and
// B^3 membership of phi1 o phi1. Numeric only (exact membership solving).
LieModuloReport check_lie_modulo(const ContactDecomposition& d);

// Searches for phi1 completing the pair (mu0, phi2) to a 2-compatible algebra.
// The linear stage computes the space of common cocycles; the quadratic
// residual is then expanded over symbolic coordinates on that space.
struct Phi1SearchResult {
  enum class Status { no_solution, solvable, indeterminate } status;
  std::size_t cocycle_space_dim = 0;
  // certificate for no_solution: a residual entry that is a nonzero constant
  std::string certificate;
};

Phi1SearchResult find_phi1_obstruction(const Cochain2& mu0, const Cochain2& phi2);

// Eigenvalue pairing: the characteristic polynomial of a numeric catalog f is
// an even function (spectrum symmetric under negation).
bool spectrum_symmetric(const QMatrix& f);

// span(e_1, ker f-hat) is closed under the assembled bracket.
bool kernel_subalgebra_closed(const ContactDecomposition& d);

// Characteristic-subspace support: phi1(C_a, C_b) lies in C_{a+b} (zero when
// a+b is not an eigenvalue). Diagonal numeric f only.
bool check_spectral_support(const ContactDecomposition& d);

}  // namespace contactlie
