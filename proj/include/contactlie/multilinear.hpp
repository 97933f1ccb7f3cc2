#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "contactlie/qmatrix.hpp"
#include "contactlie/scalar.hpp"

namespace contactlie {

struct DimMismatch : ScalarError {
  using ScalarError::ScalarError;
};

// Element of V in the fixed basis e_1..e_n (indices are 1-based throughout,
// matching the catalog tables).
struct Vec {
  int dim = 0;
  std::vector<Scalar> c;  // size dim

  Vec() = default;
  Vec(int d, ScalarContext::Ptr ctx) : dim(d), c(std::size_t(d), Scalar::zero(ctx)) {}
  static Vec basis(int i, int dim, ScalarContext::Ptr ctx);

  Scalar& operator[](int i) { return c[std::size_t(i - 1)]; }  // 1-based
  const Scalar& operator[](int i) const { return c[std::size_t(i - 1)]; }
  bool is_zero() const;
  Vec operator+(const Vec& rhs) const;
  Vec operator-(const Vec& rhs) const;
  Vec scaled(const Scalar& s) const;
  bool operator==(const Vec& rhs) const { return dim == rhs.dim && c == rhs.c; }
  std::string to_string(const std::vector<std::string>* labels = nullptr) const;

  bool is_numeric() const;
  QVec to_qvec() const;  // requires is_numeric()
  static Vec from_qvec(const QVec& v, ScalarContext::Ptr ctx);
};

// Endomorphism of V; column j holds the image of e_j.
struct Endo {
  int dim = 0;
  std::vector<Scalar> entries;  // row-major dim x dim

  Endo() = default;
  Endo(int d, ScalarContext::Ptr ctx)
      : dim(d), entries(std::size_t(d) * std::size_t(d), Scalar::zero(ctx)) {}
  static Endo identity(int d, ScalarContext::Ptr ctx);

  Scalar& at(int i, int j) { return entries[std::size_t(i - 1) * dim + std::size_t(j - 1)]; }
  const Scalar& at(int i, int j) const {
    return entries[std::size_t(i - 1) * dim + std::size_t(j - 1)];
  }
  Vec apply(const Vec& v) const;
  Vec column(int j) const;
  Endo operator+(const Endo& rhs) const;
  Endo operator-(const Endo& rhs) const;
  Endo operator*(const Endo& rhs) const;
  bool operator==(const Endo& rhs) const { return dim == rhs.dim && entries == rhs.entries; }
  bool is_zero() const;
  Scalar trace() const;
  Endo transposed() const;

  bool is_numeric() const;
  QMatrix to_qmatrix() const;  // requires is_numeric()
  static Endo from_qmatrix(const QMatrix& m, ScalarContext::Ptr ctx);
};

// Alternating bilinear map V x V -> V as sparse structure constants:
// entry (i, j, k) with i < j is the e_k-coefficient of the value on (e_i, e_j).
class Cochain2 {
 public:
  Cochain2() = default;
  Cochain2(int dim, ScalarContext::Ptr ctx) : dim_(dim), ctx_(std::move(ctx)) {}

  int dim() const { return dim_; }
  const ScalarContext::Ptr& context() const { return ctx_; }

  // Adds c * e_k to the value on (e_i, e_j); i != j, any order (sign handled).
  void add(int i, int j, int k, const Scalar& c);
  void set(int i, int j, int k, const Scalar& c);
  Scalar coeff(int i, int j, int k) const;  // signed lookup

  // Value on a pair of basis vectors, as a sparse list of (k, coeff).
  std::vector<std::pair<int, Scalar>> value(int i, int j) const;
  Vec value_vec(int i, int j) const;
  Vec eval(const Vec& x, const Vec& y) const;  // bilinear expansion

  bool is_zero() const { return entries_.empty(); }
  Cochain2 operator+(const Cochain2& rhs) const;
  Cochain2 operator-(const Cochain2& rhs) const;
  Cochain2 scaled(const Scalar& s) const;
  bool operator==(const Cochain2& rhs) const;

  Cochain2 substitute(const std::map<std::string, Scalar>& bindings) const;
  bool is_numeric() const;

  const std::map<std::array<int, 3>, Scalar>& entries() const { return entries_; }
  std::string to_string(const std::vector<std::string>* labels = nullptr) const;

 private:
  int dim_ = 0;
  ScalarContext::Ptr ctx_;
  std::map<std::array<int, 3>, Scalar> entries_;  // key (i, j, k), i < j
};

// Alternating trilinear map V^3 -> V; keys (i, j, k, l) with i < j < k.
class Cochain3 {
 public:
  Cochain3() = default;
  Cochain3(int dim, ScalarContext::Ptr ctx) : dim_(dim), ctx_(std::move(ctx)) {}

  int dim() const { return dim_; }
  const ScalarContext::Ptr& context() const { return ctx_; }

  void add(int i, int j, int k, int l, const Scalar& c);  // any index order
  Scalar coeff(int i, int j, int k, int l) const;         // signed lookup
  Vec value_vec(int i, int j, int k) const;
  Vec eval(const Vec& x, const Vec& y, const Vec& z) const;

  bool is_zero() const { return entries_.empty(); }
  Cochain3 operator+(const Cochain3& rhs) const;
  Cochain3 operator-(const Cochain3& rhs) const;
  Cochain3 scaled(const Scalar& s) const;
  bool operator==(const Cochain3& rhs) const;
  Cochain3 substitute(const std::map<std::string, Scalar>& bindings) const;
  bool is_numeric() const;

  const std::map<std::array<int, 4>, Scalar>& entries() const { return entries_; }
  std::string to_string() const;

 private:
  int dim_ = 0;
  ScalarContext::Ptr ctx_;
  std::map<std::array<int, 4>, Scalar> entries_;
};

// Composition product: phi o psi (a,b,c) = phi(psi(a,b),c) + phi(psi(b,c),a)
// + phi(psi(c,a),b). Alternating because phi and psi are skew.
Cochain3 comp_product(const Cochain2& phi, const Cochain2& psi);

// Chevalley-Eilenberg coboundary on 2-cochains: delta_mu phi = mu o phi + phi o mu.
Cochain3 coboundary2(const Cochain2& mu, const Cochain2& phi);

// Coboundary on endomorphisms: (delta_mu g)(x,y) = mu(gx,y) + mu(x,gy) - g(mu(x,y));
// g is a derivation of mu exactly when this vanishes.
Cochain2 coboundary1(const Cochain2& mu, const Endo& g);

// Flattening between cochains and coordinate vectors over Q (numeric cochains).
std::vector<std::array<int, 3>> cochain2_coords(int dim);
std::vector<std::array<int, 4>> cochain3_coords(int dim);
QVec flatten2(const Cochain2& c, const std::vector<std::array<int, 3>>& coords);
QVec flatten3(const Cochain3& c, const std::vector<std::array<int, 4>>& coords);
Cochain2 unflatten2(const QVec& v, int dim, const std::vector<std::array<int, 3>>& coords,
                    ScalarContext::Ptr ctx);

// Decides membership of `target` in the image of delta_mu on 2-cochains and
// returns a preimage when one exists. mu must be parameter-free; a parametric
// target is solved monomial-by-monomial (parameters treated as independent
// transcendentals). Throws on a parametric mu.
std::optional<Cochain2> solve_coboundary_membership(const Cochain2& mu, const Cochain3& target);

}  // namespace contactlie
