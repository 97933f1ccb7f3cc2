#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contactlie/rp.hpp"

using namespace contactlie;

TEST_CASE("theta matrix invariants") {
  for (int p = 1; p <= 4; ++p) {
    QMatrix t = theta_matrix(p);
    QMatrix id = QMatrix::identity(std::size_t(2 * p));
    CHECK((t * t) == id * rat(-1));
    CHECK(t.transposed() == t * rat(-1));
  }
}

TEST_CASE("tilde transform") {
  auto ctx = ScalarContext::make_simple({"a", "b", "c", "d"});
  Endo m(2, ctx);
  m.at(1, 1) = Scalar::parameter("a", ctx);
  m.at(1, 2) = Scalar::parameter("b", ctx);
  m.at(2, 1) = Scalar::parameter("c", ctx);
  m.at(2, 2) = Scalar::parameter("d", ctx);
  Endo t = tilde(m);
  CHECK(t.at(1, 1) == -Scalar::parameter("d", ctx));
  CHECK(t.at(1, 2) == Scalar::parameter("b", ctx));
  CHECK(t.at(2, 1) == Scalar::parameter("c", ctx));
  CHECK(t.at(2, 2) == -Scalar::parameter("a", ctx));
  CHECK(tilde(t) == m);  // involution

  auto cx = ScalarContext::make();
  Endo neg_id = Endo(2, cx) - Endo::identity(2, cx);
  CHECK(tilde(Endo::identity(2, cx)) == neg_id);
  Endo num(2, cx);
  num.at(1, 1) = Scalar::constant(1, cx);
  num.at(1, 2) = Scalar::constant(2, cx);
  num.at(2, 1) = Scalar::constant(3, cx);
  num.at(2, 2) = Scalar::constant(4, cx);
  Endo prod = num * tilde(num);
  // A * tilde(A) = -det(A) Id; det = -2 here
  CHECK(prod.at(1, 1) == Scalar::constant(2, cx));
  CHECK(prod.at(2, 2) == Scalar::constant(2, cx));
  CHECK(prod.at(1, 2).is_zero());
  CHECK(prod.at(2, 1).is_zero());
}

TEST_CASE("A tilde(A) = -det A for random symbolic 2x2") {
  auto ctx = ScalarContext::make_simple({"a", "b", "c", "d"});
  std::mt19937_64 rng(808);
  int cases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Endo m(2, ctx);
    std::vector<std::string> names{"a", "b", "c", "d"};
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        Scalar s = Scalar::constant(random_rational(rng, 4, 2), ctx);
        s = s * Scalar::parameter(names[std::size_t(2 * (i - 1) + (j - 1))], ctx) +
            Scalar::constant(random_rational(rng, 3, 2), ctx);
        m.at(i, j) = s;
      }
    Scalar det = m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
    Endo expected(2, ctx);
    expected.at(1, 1) = -det;
    expected.at(2, 2) = -det;
    CHECK(m * tilde(m) == expected);
    ++cases;
  }
  CHECK(cases == 50);
}

TEST_CASE("gamma labels") {
  CHECK(in_gamma({1}));
  CHECK(in_gamma({0, 1, 1}));
  CHECK(!in_gamma({0, 0, 0}));
  CHECK(!in_gamma({1, 0, 1}));
  CHECK(block_pair_label(3, 1, 2) == GammaLabel{1, 0});
  CHECK(block_pair_label(3, 2, 3) == GammaLabel{0, 1});
  CHECK(block_pair_label(3, 1, 3) == GammaLabel{1, 1});
  CHECK(label_sum({1, 0}, {0, 1}) == GammaLabel{1, 1});
  CHECK(label_sum({1, 1}, {0, 1}) == GammaLabel{1, 0});
}

TEST_CASE("rp basis dimensions and membership") {
  auto ctx = ScalarContext::make();
  for (int p = 1; p <= 5; ++p) {
    GradedBasis b = rp_basis(p, ctx);
    CHECK(b.total() == std::size_t(p * (2 * p + 1)));
    CHECK(b.h.size() == std::size_t(3 * p));
    for (const auto& [label, elems] : b.m) {
      CHECK(in_gamma(label));
      CHECK(elems.size() == 4);
    }
    CHECK(b.m.size() == std::size_t(p * (p - 1) / 2));
    for (const auto& e : b.all()) CHECK(is_in_rp(e, p));
  }
}

TEST_CASE("rp basis spans the exact solution space") {
  // independent route: nullspace dimension of the Theta condition
  auto ctx = ScalarContext::make();
  for (int p = 1; p <= 5; ++p) {
    const int n = 2 * p;
    QMatrix theta = theta_matrix(p);
    QMatrix sys(std::size_t(n) * std::size_t(n), std::size_t(n) * std::size_t(n));
    std::size_t row = 0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c, ++row)
        for (int k = 0; k < n; ++k) {
          sys.at(row, std::size_t(k) * n + std::size_t(r)) +=
              theta.at(std::size_t(k), std::size_t(c));
          sys.at(row, std::size_t(k) * n + std::size_t(c)) +=
              theta.at(std::size_t(r), std::size_t(k));
        }
    CHECK(kernel_basis(sys).size() == std::size_t(p * (2 * p + 1)));
    // the constructed basis is linearly independent
    RowSpace span(std::size_t(n) * std::size_t(n));
    for (const auto& e : rp_basis(p, ctx).all()) {
      QMatrix q = e.to_qmatrix();
      QVec v(std::size_t(n) * std::size_t(n), Rational(0));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) v[std::size_t(r) * n + std::size_t(c)] = q.at(std::size_t(r), std::size_t(c));
      span.insert(v);
    }
    CHECK(span.dim() == std::size_t(p * (2 * p + 1)));
  }
}

TEST_CASE("membership: identity fails, block pattern agrees") {
  auto ctx = ScalarContext::make();
  for (int p = 1; p <= 3; ++p) CHECK(!is_in_rp(Endo::identity(2 * p, ctx), p));

  // diag(1,1,0,0) has a non-traceless first block
  Endo bad(4, ctx);
  bad.at(1, 1) = Scalar::one(ctx);
  bad.at(2, 2) = Scalar::one(ctx);
  CHECK(!is_in_rp(bad, 2));
  BlockReport br = check_block_shape(bad, 2);
  CHECK(!br.ok);
  REQUIRE(br.nonzero_traces.size() == 1);
  CHECK(br.nonzero_traces[0].first == 1);

  // diag(1,-1,0,0): the five-dimensional example's f
  Endo good(4, ctx);
  good.at(1, 1) = Scalar::one(ctx);
  good.at(2, 2) = -Scalar::one(ctx);
  CHECK(is_in_rp(good, 2));
  CHECK(check_block_shape(good, 2).ok);
}

TEST_CASE("Theta condition agrees with the block test on random matrices") {
  auto ctx = ScalarContext::make();
  std::mt19937_64 rng(1313);
  for (int p : {2, 3}) {
    int agreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
      Endo a(2 * p, ctx);
      // half the trials sampled inside r_p, half arbitrary
      if (trial % 2 == 0) {
        GradedBasis b = rp_basis(p, ctx);
        auto all = b.all();
        for (const auto& e : all) {
          Scalar c = Scalar::constant(random_rational(rng, 3, 2), ctx);
          for (int i = 1; i <= 2 * p; ++i)
            for (int j = 1; j <= 2 * p; ++j) a.at(i, j) += c * e.at(i, j);
        }
      } else {
        for (int i = 1; i <= 2 * p; ++i)
          for (int j = 1; j <= 2 * p; ++j)
            a.at(i, j) = Scalar::constant(random_rational(rng, 3, 2), ctx);
      }
      CHECK(is_in_rp(a, p) == check_block_shape(a, p).ok);
      ++agreements;
    }
    CHECK(agreements == 200);
  }
}

TEST_CASE("the symmetric nilpotent pattern lies in r_2") {
  // f(e') with entries b12 in (1,2), b32/b42 pattern per the reduced 5-dim form
  auto ctx = ScalarContext::make_simple({"b12", "b32", "b33", "b34", "b42", "b43"});
  Endo f(4, ctx);
  f.at(1, 2) = Scalar::parameter("b12", ctx);
  f.at(1, 3) = -Scalar::parameter("b42", ctx);
  f.at(1, 4) = Scalar::parameter("b32", ctx);
  f.at(3, 2) = Scalar::parameter("b32", ctx);
  f.at(3, 3) = Scalar::parameter("b33", ctx);
  f.at(3, 4) = Scalar::parameter("b34", ctx);
  f.at(4, 2) = Scalar::parameter("b42", ctx);
  f.at(4, 3) = Scalar::parameter("b43", ctx);
  f.at(4, 4) = -Scalar::parameter("b33", ctx);
  CHECK(is_in_rp(f, 2));
}

TEST_CASE("r0p basis dimension and closure") {
  auto ctx = ScalarContext::make();
  for (int p = 1; p <= 5; ++p) {
    auto basis = r0p_basis(p, ctx);
    CHECK(basis.size() == std::size_t(p * (2 * p - 1)));
    for (const auto& e : basis) {
      CHECK(is_in_rp(e, p));
      for (int i = 1; i <= 2 * p; ++i) {
        CHECK(e.at(i, 1).is_zero());
        CHECK(e.at(2, i).is_zero());
      }
    }
  }
  // closure under commutator for p <= 3
  for (int p = 1; p <= 3; ++p) {
    auto basis = r0p_basis(p, ctx);
    const int n = 2 * p;
    RowSpace span(std::size_t(n) * std::size_t(n));
    auto flat = [&](const QMatrix& q) {
      QVec v(std::size_t(n) * std::size_t(n), Rational(0));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) v[std::size_t(r) * n + std::size_t(c)] = q.at(std::size_t(r), std::size_t(c));
      return v;
    };
    for (const auto& e : basis) span.insert(flat(e.to_qmatrix()));
    for (const auto& a : basis)
      for (const auto& b : basis) {
        QMatrix comm = a.to_qmatrix() * b.to_qmatrix() - b.to_qmatrix() * a.to_qmatrix();
        CHECK(span.contains(flat(comm)));
      }
  }
}

TEST_CASE("r_p closed under commutator") {
  auto ctx = ScalarContext::make();
  for (int p = 1; p <= 4; ++p) {
    auto all = rp_basis(p, ctx).all();
    const int n = 2 * p;
    RowSpace span(std::size_t(n) * std::size_t(n));
    auto flat = [&](const QMatrix& q) {
      QVec v(std::size_t(n) * std::size_t(n), Rational(0));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) v[std::size_t(r) * n + std::size_t(c)] = q.at(std::size_t(r), std::size_t(c));
      return v;
    };
    std::vector<QMatrix> mats;
    for (const auto& e : all) {
      mats.push_back(e.to_qmatrix());
      span.insert(flat(mats.back()));
    }
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t j = i + 1; j < mats.size(); ++j)
        CHECK(span.contains(flat(mats[i] * mats[j] - mats[j] * mats[i])));
  }
}

TEST_CASE("h_p is p commuting copies of the traceless 2x2 algebra") {
  auto ctx = ScalarContext::make();
  for (int p = 2; p <= 3; ++p) {
    GradedBasis b = rp_basis(p, ctx);
    // per block: indices 3b, 3b+1, 3b+2 are X, H, Y
    for (int blk = 0; blk < p; ++blk) {
      QMatrix x = b.h[std::size_t(3 * blk + 0)].to_qmatrix();
      QMatrix h = b.h[std::size_t(3 * blk + 1)].to_qmatrix();
      QMatrix y = b.h[std::size_t(3 * blk + 2)].to_qmatrix();
      CHECK((h * x - x * h) == x * rat(2));
      CHECK((h * y - y * h) == y * rat(-2));
      CHECK((x * y - y * x) == h);
    }
    for (int b1 = 0; b1 < p; ++b1)
      for (int b2 = b1 + 1; b2 < p; ++b2)
        for (int s = 0; s < 3; ++s)
          for (int t = 0; t < 3; ++t) {
            QMatrix m1 = b.h[std::size_t(3 * b1 + s)].to_qmatrix();
            QMatrix m2 = b.h[std::size_t(3 * b2 + t)].to_qmatrix();
            CHECK((m1 * m2 - m2 * m1).is_zero());
          }
  }
}

TEST_CASE("grading holds for p = 2, 3, 4") {
  for (int p = 2; p <= 4; ++p) {
    GradingReport r = check_grading(p);
    CHECK(r.ok);
    CHECK(r.leaks.empty());
    int dim = p * (2 * p + 1);
    CHECK(r.pairs_checked == dim * (dim + 1) / 2);
  }
}

TEST_CASE("non-contiguous label sums force vanishing brackets (p = 4)") {
  // labels (1,0,0) and (0,0,1) sum to (1,0,1), outside Gamma
  auto ctx = ScalarContext::make();
  GradedBasis b = rp_basis(4, ctx);
  GammaLabel g1{1, 0, 0}, g2{0, 0, 1};
  CHECK(!in_gamma(label_sum(g1, g2)));
  for (const auto& a : b.m.at(g1))
    for (const auto& c : b.m.at(g2)) {
      QMatrix comm =
          a.to_qmatrix() * c.to_qmatrix() - c.to_qmatrix() * a.to_qmatrix();
      CHECK(comm.is_zero());
    }
}
