#pragma once

#include <optional>
#include <vector>

#include "contactlie/rational.hpp"

namespace contactlie {

// Dense matrix over Q. Row-major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator*(const Rational& c) const;
  bool operator==(const QMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_; }
  bool is_zero() const;
  QMatrix transposed() const;
  Rational trace() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

using QVec = std::vector<Rational>;

QVec mat_vec(const QMatrix& a, const QVec& x);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

// Basis of the right kernel {x : Ax = 0}.
std::vector<QVec> kernel_basis(const QMatrix& a);

// One solution of Ax = b, if any.
std::optional<QVec> solve(const QMatrix& a, const QVec& b);

std::optional<QMatrix> inverse(const QMatrix& a);

Rational determinant(QMatrix a);

// Row space in echelon form; supports membership and comparisons.
class RowSpace {
 public:
  RowSpace() : ambient_(0) {}
  explicit RowSpace(std::size_t ambient) : ambient_(ambient) {}
  void insert(const QVec& v);  // no-op if already in the span
  bool contains(const QVec& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<QVec>& basis() const { return rows_; }
  bool same_space(const RowSpace& other) const;

 private:
  QVec reduce(QVec v) const;
  std::size_t ambient_;
  std::vector<QVec> rows_;  // kept in echelon form, leading entry 1
};

// Univariate polynomial over Q, coefficients ascending (coeffs[k] * x^k).
class QPoly {
 public:
  QPoly() {}
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly constant(Rational v) { return QPoly({std::move(v)}); }
  static QPoly x() { return QPoly({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  QPoly operator+(const QPoly& rhs) const;
  QPoly operator-(const QPoly& rhs) const;
  QPoly operator*(const QPoly& rhs) const;
  QPoly operator*(const Rational& v) const;
  bool operator==(const QPoly& rhs) const { return c_ == rhs.c_; }

  Rational eval(const Rational& x) const;
  QMatrix eval(const QMatrix& a) const;
  QPoly derivative() const;
  QPoly monic() const;

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

QPoly poly_gcd(QPoly a, QPoly b);  // monic gcd
// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
struct ExtGcd {
  QPoly g, u, v;
};
ExtGcd poly_ext_gcd(const QPoly& a, const QPoly& b);
QPoly squarefree_part(const QPoly& p);  // p / gcd(p, p'), monic

// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence.
QPoly char_poly(const QMatrix& a);

// Minimal polynomial (monic) via the first linear dependence among powers of A.
QPoly min_poly(const QMatrix& a);

// All rational roots of a nonzero polynomial, with multiplicities.
// Exact: relies on complete integer factorization of the scaled constant term.
std::vector<std::pair<Rational, int>> rational_roots(const QPoly& p);

bool is_nilpotent(const QMatrix& a);

}  // namespace contactlie
