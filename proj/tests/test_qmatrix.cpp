#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contactlie/qmatrix.hpp"

using namespace contactlie;

namespace {

QMatrix random_matrix(std::size_t n, std::mt19937_64& rng, long max_num = 6, long max_den = 3) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_rational(rng, max_num, max_den);
  return m;
}

}  // namespace

TEST_CASE("rref, rank, kernel") {
  QMatrix m(3, 4);
  // x1 + x2 = 0, x3 - x4 = 0
  m.at(0, 0) = 1; m.at(0, 1) = 1;
  m.at(1, 2) = 1; m.at(1, 3) = -1;
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    auto y = mat_vec(m, v);
    CHECK(std::all_of(y.begin(), y.end(), [](const Rational& r) { return r == 0; }));
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix a = random_matrix(4, rng);
    auto inv = inverse(a);
    if (!inv) continue;
    CHECK((a * *inv) == QMatrix::identity(4));
    QVec b{rat(1), rat(-2), rat(3, 2), rat(0)};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(mat_vec(a, *x) == b);
  }
}

TEST_CASE("determinant matches cofactor on small cases") {
  QMatrix a(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = 3; a.at(1, 1) = 4;
  CHECK(determinant(a) == rat(-2));
  QMatrix s(3, 3);  // singular
  s.at(0, 0) = 1; s.at(0, 1) = 2; s.at(0, 2) = 3;
  s.at(1, 0) = 2; s.at(1, 1) = 4; s.at(1, 2) = 6;
  s.at(2, 0) = 0; s.at(2, 1) = 1; s.at(2, 2) = 1;
  CHECK(determinant(s) == 0);
}

TEST_CASE("row space membership") {
  RowSpace rs(3);
  rs.insert({rat(1), rat(0), rat(1)});
  rs.insert({rat(0), rat(1), rat(1)});
  CHECK(rs.dim() == 2);
  CHECK(rs.contains({rat(2), rat(3), rat(5)}));
  CHECK(!rs.contains({rat(0), rat(0), rat(1)}));
  rs.insert({rat(1), rat(1), rat(2)});  // dependent
  CHECK(rs.dim() == 2);
}

TEST_CASE("poly arithmetic, gcd, squarefree") {
  QPoly x = QPoly::x();
  QPoly p = (x - QPoly::constant(1)) * (x - QPoly::constant(1)) * (x + QPoly::constant(2));
  QPoly sf = squarefree_part(p);
  CHECK(sf == ((x - QPoly::constant(1)) * (x + QPoly::constant(2))).monic());
  auto eg = poly_ext_gcd(sf, sf.derivative());
  CHECK(eg.g.degree() == 0);
  CHECK((eg.u * sf + eg.v * sf.derivative()) == eg.g);
}

TEST_CASE("char poly and min poly") {
  // companion-ish matrix of (x-1)(x-2)(x-3)
  QMatrix a(3, 3);
  a.at(0, 0) = 1; a.at(1, 1) = 2; a.at(2, 2) = 3;
  QPoly chi = char_poly(a);
  QPoly x = QPoly::x();
  CHECK(chi == (x - QPoly::constant(1)) * (x - QPoly::constant(2)) * (x - QPoly::constant(3)));
  CHECK(min_poly(a) == chi);

  QMatrix j(2, 2);  // Jordan block at 1
  j.at(0, 0) = 1; j.at(0, 1) = 1; j.at(1, 1) = 1;
  CHECK(char_poly(j) == (x - QPoly::constant(1)) * (x - QPoly::constant(1)));
  CHECK(min_poly(j) == char_poly(j));
  CHECK(min_poly(QMatrix::identity(2)) == x - QPoly::constant(1));
}

TEST_CASE("char poly of random matrix annihilates it") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix a = random_matrix(4, rng);
    CHECK(char_poly(a).eval(a).is_zero());  // Cayley-Hamilton
  }
}

TEST_CASE("rational roots with multiplicities") {
  QPoly x = QPoly::x();
  QPoly p = (x - QPoly::constant(rat(1, 2))) * (x - QPoly::constant(rat(1, 2))) *
            (x + QPoly::constant(3)) * x;
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == std::pair<Rational, int>{rat(-3), 1});
  CHECK(roots[1] == std::pair<Rational, int>{rat(0), 1});
  CHECK(roots[2] == std::pair<Rational, int>{rat(1, 2), 2});

  // x^2 + 1: no rational roots
  CHECK(rational_roots(x * x + QPoly::constant(1)).empty());

  // larger constant term exercising the factorizer
  QPoly q = (x - QPoly::constant(1009)) * (x + QPoly::constant(100003));
  auto r2 = rational_roots(q);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].first == rat(-100003));
  CHECK(r2[1].first == rat(1009));
}

TEST_CASE("nilpotency test") {
  QMatrix n(3, 3);
  n.at(0, 1) = 1; n.at(1, 2) = 1;
  CHECK(is_nilpotent(n));
  CHECK(!is_nilpotent(QMatrix::identity(3)));
}
