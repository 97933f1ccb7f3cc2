#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace contactlie {

// Exact rational numbers. mpq_class keeps gcd(num, den) = 1 and den > 0
// once canonicalized; every constructor here canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "n" or "n/d" with optional leading sign.
inline Rational rat_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  r.canonicalize();
  if (r.get_den() < 0) throw std::invalid_argument("negative denominator: " + text);
  return r;
}

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

// Uniform small rational, numerator in [-max_num, max_num], denominator in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 4) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return rat(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long max_num = 9,
                                        long max_den = 4) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (r != 0) return r;
  }
}

}  // namespace contactlie
