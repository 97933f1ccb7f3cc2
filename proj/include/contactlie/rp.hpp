#pragma once

#include <map>
#include <string>
#include <vector>

#include "contactlie/multilinear.hpp"

namespace contactlie {

// Block-diagonal symplectic-type form: p copies of [[0,1],[-1,0]] on the
// diagonal. Satisfies Theta^2 = -Id and Theta^t = -Theta.
QMatrix theta_matrix(int p);
Endo theta_endo(int p, ScalarContext::Ptr ctx);

// On a 2x2 block [[a,b],[c,d]] returns [[-d,b],[c,-a]], the opposite of the
// transposed cofactor matrix; A * tilde(A) = -det(A) * Id.
Endo tilde(const Endo& a);

// Grading label: p-1 bits; lies in Gamma exactly when the 1-positions form a
// nonempty contiguous run.
using GammaLabel = std::vector<int>;
bool in_gamma(const GammaLabel& g);
GammaLabel block_pair_label(int p, int upper_block, int lower_block);  // blocks 1-based
GammaLabel label_sum(const GammaLabel& a, const GammaLabel& b);        // in Z_2^{p-1}
std::string label_to_string(const GammaLabel& g);

// Basis of r_p = {A : A^t Theta + Theta A = 0}, organized by the grading:
// h holds the block-diagonal part (p traceless 2x2 factors, 3p elements);
// each m_gamma holds the 4 elements supported on its off-diagonal block pair.
struct GradedBasis {
  int p = 0;
  std::vector<Endo> h;
  std::map<GammaLabel, std::vector<Endo>> m;
  std::size_t total() const;
  std::vector<Endo> all() const;  // h first, then m components in label order
};

GradedBasis rp_basis(int p, ScalarContext::Ptr ctx);

// Exact membership test; works on symbolic entries.
bool is_in_rp(const Endo& a, int p);

// Block-shape report: trace of each diagonal block, and the defect
// A_ji - tilde(A_ij) for each off-diagonal pair.
struct BlockReport {
  bool ok = true;
  std::vector<std::pair<int, Scalar>> nonzero_traces;            // (block, trace)
  std::vector<std::pair<std::pair<int, int>, Endo>> tilde_defects;  // ((i,j), defect)
};
BlockReport check_block_shape(const Endo& a, int p);

// Basis of the subalgebra of matrices in r_p with zero first column and zero
// second row; dimension p(2p-1).
std::vector<Endo> r0p_basis(int p, ScalarContext::Ptr ctx);

// Exhaustive bracket-grading check over the graded basis:
// [h,h] in h, [h,m_g] in m_g, [m_g,m_g] in h, and [m_g,m_g'] in m_{g+g'}
// when g+g' lies in Gamma, zero otherwise. Reports any leakage.
struct GradingLeak {
  std::string lhs, rhs;        // basis element descriptions
  std::string predicted;       // component name
  std::string observed;        // observed support
};
struct GradingReport {
  bool ok = true;
  int pairs_checked = 0;
  std::vector<GradingLeak> leaks;
};
GradingReport check_grading(int p);

}  // namespace contactlie
