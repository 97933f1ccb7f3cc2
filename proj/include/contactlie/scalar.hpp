#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contactlie/rational.hpp"

namespace contactlie {

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScalarParseError : ScalarError {
  std::size_t position;
  ScalarParseError(const std::string& msg, std::size_t pos)
      : ScalarError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A named coefficient parameter. Two kinds of algebraic data may be attached:
//  - a monic univariate defining relation p(x) = 0 with deg p >= 2, stored as the
//    rewrite x^deg -> tail[deg-1] x^{deg-1} + ... + tail[0];
//  - a reciprocal partner y with x*y = 1 (used to keep 1/x inside the
//    polynomial ring).
// A parameter carries at most one of the two.
struct ParamInfo {
  std::string name;
  std::vector<Rational> relation_tail;  // empty when no relation
  int reciprocal_of = -1;               // partner index, -1 when none
};

class ScalarContext {
 public:
  using Ptr = std::shared_ptr<const ScalarContext>;

  static Ptr make() { return Ptr(new ScalarContext({})); }
  static Ptr make(std::vector<ParamInfo> params);

  // Convenience: plain parameters, no relations.
  static Ptr make_simple(const std::vector<std::string>& names);

  std::size_t size() const { return params_.size(); }
  const ParamInfo& param(std::size_t i) const { return params_[i]; }
  int index_of(const std::string& name) const;  // -1 when unknown
  bool has_relations() const;

  bool same_content(const ScalarContext& other) const;

 private:
  explicit ScalarContext(std::vector<ParamInfo> params) : params_(std::move(params)) {}
  std::vector<ParamInfo> params_;
};

inline bool contexts_compatible(const ScalarContext::Ptr& a, const ScalarContext::Ptr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_content(*b);
}

// Exponent vector, one entry per context parameter. std::map over these is
// lexicographic in parameter order, which fixes the canonical term order.
using Monomial = std::vector<unsigned>;

// Sparse multivariate polynomial over Q, fully reduced modulo the context's
// relations. Canonical form: no zero coefficients, every relation-bound
// exponent below its relation degree, no monomial containing both members of
// a reciprocal pair. Zero <=> empty term map. Immutable in spirit: all
// operations return fresh values.
class Scalar {
 public:
  Scalar() : ctx_(ScalarContext::make()) {}
  explicit Scalar(ScalarContext::Ptr ctx) : ctx_(std::move(ctx)) {}

  static Scalar constant(Rational value, ScalarContext::Ptr ctx);
  static Scalar parameter(const std::string& name, ScalarContext::Ptr ctx);
  static Scalar zero(ScalarContext::Ptr ctx) { return Scalar(std::move(ctx)); }
  static Scalar one(ScalarContext::Ptr ctx) { return constant(1, std::move(ctx)); }

  const ScalarContext::Ptr& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant().
  Rational constant_value() const;
  std::optional<Rational> as_rational() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar operator*(const Rational& c) const;
  Scalar pow(unsigned e) const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  // Substitutes values for parameters by name; unbound parameters pass
  // through. Values must live in a compatible context. Whether a substituted
  // value satisfies the parameter's relation is the caller's responsibility.
  Scalar substitute(const std::map<std::string, Scalar>& bindings) const;
  Scalar substitute_rationals(const std::map<std::string, Rational>& bindings) const;

  std::string to_string() const;

  // Degree in a single parameter (0 for absent); total degree of the polynomial.
  unsigned degree_in(std::size_t param_index) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // Internal-ish: add one term and renormalize lazily; used by builders.
  void add_term(const Monomial& m, const Rational& c);
  void normalize() { reduce(); }

 private:
  void reduce();

  ScalarContext::Ptr ctx_;
  std::map<Monomial, Rational> terms_;
};

inline Scalar operator*(const Rational& c, const Scalar& s) { return s * c; }

// Expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' natural)*
//   primary:= rational | ident | '(' expr ')'
//   rational := integer ('/' positive-integer)?
// Identifiers are ASCII alphanumeric starting with a letter.
Scalar parse_scalar(const std::string& text, ScalarContext::Ptr ctx);

// Parses a univariate monic relation polynomial in `param`, e.g. "f^2-f-1".
// Returns the rewrite tail for x^deg. Throws unless monic of degree >= 2 with
// no other parameters involved.
std::vector<Rational> parse_relation(const std::string& text, const std::string& param);

}  // namespace contactlie
