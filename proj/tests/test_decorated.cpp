#include <doctest.h>

#include "dsign/decorated.hpp"
#include "dsign/error.hpp"
#include "dsign/generators.hpp"

using namespace dsign;

namespace {

Mat col(std::initializer_list<double> xs) {
  Mat m(static_cast<Eigen::Index>(xs.size()), 1);
  int i = 0;
  for (double x : xs) m(i++, 0) = x;
  return m;
}

DecoratedAlgebra quaternion_split() {
  return decorate(classical("H"), col({1, 0, 0, 0}), Mat::Identity(4, 4).rightCols(3));
}

DecoratedAlgebra random_object(Rng& rng) {
  const int n = rng.index(2) ? 8 : 4;
  return random_decoration(random_classical_isotope(n, rng), 2 * rng.index(n / 2) + 1, rng);
}

}  // namespace

TEST_CASE("decorate validates the splitting") {
  CHECK_NOTHROW(quaternion_split());
  CHECK_NOTHROW(decorate(classical("H"), Mat::Identity(4, 4).leftCols(3), col({0, 0, 0, 1})));
  CHECK_THROWS_AS(decorate(classical("C"), col({1, 0}), col({1, 0})), Error);
  CHECK_THROWS_AS(decorate(classical("H"), Mat::Identity(4, 4).leftCols(2), Mat::Identity(4, 4).rightCols(2)), Error);
  CHECK_THROWS_AS(decorate(classical("C"), Mat::Identity(2, 2), Mat::Zero(2, 0)), Error);
}

TEST_CASE("kappa") {
  const Mat k = kappa(decorate(classical("C"), col({1, 0}), col({0, 1})));
  CHECK(k.isApprox((Mat(2, 2) << 1, 0, 0, -1).finished()));

  // U = span{e1 + e2} fixed, V = span{e2} negated: kappa e1 = e1 + 2 e2.
  const Mat ob = kappa(decorate(classical("C"), col({1, 1}), col({0, 1})));
  CHECK((ob - (Mat(2, 2) << 1, 0, 2, -1).finished()).norm() < 1e-14);

  Rng rng(3);
  for (int k2 = 0; k2 < 30; ++k2) {
    const DecoratedAlgebra x = random_object(rng);
    const Mat kx = kappa(x);
    REQUIRE(sign_det(kx) == Sign::Minus);
    REQUIRE((kx * kx - Mat::Identity(x.n(), x.n())).norm() < 1e-10);
    REQUIRE((kx * x.u() - x.u()).norm() < 1e-10);
    REQUIRE((kx * x.v() + x.v()).norm() < 1e-10);
  }
}

TEST_CASE("functor_I and forget") {
  Rng rng(4);
  const DecoratedAlgebra h = quaternion_split();
  CHECK(tensor_distance(functor_I(0, 0, h).alg(), h.alg()) == 0.0);
  CHECK(block_of(functor_I(1, 0, h).alg()) == "+-");
  CHECK(block_of(functor_I(0, 1, h).alg()) == "-+");
  CHECK(block_of(functor_I(1, 1, h).alg()) == "--");
  CHECK(tensor_distance(forget(h), classical("H")) == 0.0);

  for (int k = 0; k < 20; ++k) {
    const DecoratedAlgebra x = random_object(rng);
    const Mat kx = kappa(x);
    const Algebra i11 = functor_I(1, 1, x).alg();
    REQUIRE(tensor_distance(functor_I(1, 0, functor_I(0, 1, x)).alg(), i11) < 1e-12);
    REQUIRE(tensor_distance(functor_I(1, 1, functor_I(1, 1, x)).alg(), x.alg()) < 1e-12);
    REQUIRE(tensor_distance(forget(functor_I(0, 1, x)), isotope(forget(x), Mat::Identity(x.n(), x.n()), kx)) < 1e-12);
    // U and V are carried along unchanged.
    REQUIRE(functor_I(1, 1, x).u() == x.u());

    const SignPair p = sign_pair(x.alg(), {100});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const SignPair q = sign_pair(functor_I(i, j, x).alg(), {100});
        REQUIRE(q.ell == (j ? -p.ell : p.ell));
        REQUIRE(q.r == (i ? -p.r : p.r));
      }
  }
}

TEST_CASE("transported morphisms commute with kappa") {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const DecoratedAlgebra x = random_object(rng);
    const Mat f = random_invertible(x.n(), rng);
    const DecoratedAlgebra y = transport(x, f);
    CHECK(is_morphism(f, x.alg(), y.alg()));
    const Mat ky = kappa(y);
    CHECK(max_abs(f * kappa(x) - ky * f) / std::max(1.0, max_abs(ky)) < 1e-10);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(is_morphism(f, functor_I(i, j, x).alg(), functor_I(i, j, y).alg()));
  }
}
