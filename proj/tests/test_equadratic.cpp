#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "dsign/equadratic.hpp"
#include "dsign/error.hpp"
#include "dsign/generators.hpp"
#include "dsign/quat.hpp"

using namespace dsign;

namespace {

Mat conj_matrix(int n) {
  Mat k = -Mat::Identity(n, n);
  k(0, 0) = 1;
  return k;
}

// Independent test of v^2 in R e: the component of v^2 orthogonal to e.
double off_line(const Algebra& a, const Vec& e, const Vec& v) {
  const Vec sq = a.mul(v, v);
  return (sq - e * (e.dot(sq) / e.squaredNorm())).norm();
}

std::vector<Algebra> corpus(Rng& rng) {
  const Algebra h = classical("H"), o = classical("O");
  std::vector<Algebra> out;
  for (int k = 0; k < 20; ++k) {
    const double c = rng.uniform(0.5, 2.0);
    Algebra a = h;
    if (k % 2 == 0) {
      Mat s = c * k_map(random_unit_quaternion(rng));
      if (k % 4 == 0) s = s * conj_matrix(4);
      a = isotope(h, s, s);
    } else {
      const Mat s = c * (k % 4 == 1 ? conj_matrix(8) : Mat::Identity(8, 8));
      a = isotope(o, s, s);
    }
    if (k % 3 == 0) a = transport(a, random_invertible(a.dim(), rng, 0.2));
    out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("central idempotents") {
  const auto hi = central_idempotents(classical("H"));
  REQUIRE(hi.size() == 1);
  CHECK((hi[0] - Vec::Unit(4, 0)).norm() < 1e-12);

  const auto ci = central_idempotents(classical("C"));
  REQUIRE(ci.size() == 1);
  CHECK((ci[0] - Vec::Unit(2, 0)).norm() < 1e-12);

  const auto hk = central_idempotents(isotope(classical("H"), conj_matrix(4), conj_matrix(4)));
  REQUIRE(hk.size() == 1);
  CHECK((hk[0] - Vec::Unit(4, 0)).norm() < 1e-12);

  // conj(z)^2 = z has the three cube roots of unity as solutions.
  const Algebra ckk = isotope(classical("C"), conj_matrix(2), conj_matrix(2));
  const auto roots = central_idempotents(ckk);
  CHECK(roots.size() == 3);
  for (const Vec& z : roots) {
    CHECK(z.norm() == doctest::Approx(1.0));
    CHECK((ckk.mul(z, z) - z).norm() < 1e-12);
    CHECK(is_e_quadratic(ckk, z));
  }
}

TEST_CASE("e-quadratic predicate") {
  CHECK(is_e_quadratic(classical("H"), Vec::Unit(4, 0)));
  CHECK(is_e_quadratic(classical("O"), Vec::Unit(8, 0)));
  CHECK_THROWS_AS(is_e_quadratic(classical("H"), Vec::Unit(4, 1)), Error);

  // T e = e keeps e idempotent in H_{I,T}; this T breaks the quadratic identity.
  Mat t = Mat::Identity(4, 4);
  t(1, 1) = 2.0;
  t(1, 2) = 0.5;
  CHECK_FALSE(is_e_quadratic(isotope(classical("H"), Mat::Identity(4, 4), t), Vec::Unit(4, 0)));
}

TEST_CASE("Im_e") {
  const Mat ih = im_e(classical("H"), Vec::Unit(4, 0));
  CHECK(subspace_distance(ih, Mat::Identity(4, 4).rightCols(3)) < 1e-12);
  const Algebra hkk = isotope(classical("H"), conj_matrix(4), conj_matrix(4));
  CHECK(subspace_distance(im_e(hkk, Vec::Unit(4, 0)), ih) < 1e-12);

  const Algebra o = classical("O");
  const Mat io = im_e(o, Vec::Unit(8, 0));
  CHECK(subspace_distance(io, Mat::Identity(8, 8).rightCols(7)) < 1e-12);
  for (int p = 0; p < 7; ++p)
    for (int q = 0; q < 7; ++q) REQUIRE(off_line(o, Vec::Unit(8, 0), io.col(p) + io.col(q)) < 1e-12);
}

TEST_CASE("functor G") {
  const DecoratedAlgebra g = functor_G(classical("H"));
  CHECK(tensor_distance(forget(g), classical("H")) == 0.0);
  CHECK(subspace_distance(g.u(), Vec::Unit(4, 0)) < 1e-12);
  CHECK(subspace_distance(g.v(), Mat::Identity(4, 4).rightCols(3)) < 1e-12);
  CHECK(tensor_distance(forget(functor_G(classical("O"))), classical("O")) == 0.0);

  const Mat k = kappa(g);
  const DecoratedAlgebra lhs = functor_I(1, 1, g), rhs = functor_G(isotope(classical("H"), k, k));
  CHECK(tensor_distance(lhs.alg(), rhs.alg()) <= 1e-12);
  CHECK(subspace_distance(lhs.v(), rhs.v()) < 1e-12);
}

TEST_CASE("corpus properties") {
  Rng rng(21);
  for (const Algebra& a : corpus(rng)) {
    const EQuadStructure s = equadratic_structure(a);
    CHECK((a.mul(s.e, s.e) - s.e).norm() < 1e-9);
    Mat b(a.dim(), a.dim());
    b << s.e, s.im_basis;
    CHECK(std::abs(det(b)) > 1e-8);
    for (int c = 0; c < s.im_basis.cols(); ++c) CHECK(off_line(a, s.e, s.im_basis.col(c)) < 1e-8);

    const auto ids = central_idempotents(a);
    CHECK(std::count_if(ids.begin(), ids.end(), [&](const Vec& e) { return is_e_quadratic(a, e, 1e-8); }) == 1);

    const std::string blk = block_of(a, {200});
    CHECK((blk == "++" || blk == "--"));
    const Mat k = kappa(functor_G(a));
    CHECK(block_of(isotope(a, k, k), {200}) == (blk == "++" ? "--" : "++"));

    const DecoratedAlgebra lhs = functor_I(1, 1, functor_G(a)), rhs = functor_G(isotope(a, k, k));
    CHECK(tensor_distance(lhs.alg(), rhs.alg()) <= 1e-12);
    CHECK(subspace_distance(lhs.u(), rhs.u()) < 1e-9);
    CHECK(subspace_distance(lhs.v(), rhs.v()) < 1e-9);
  }
}

TEST_CASE("rejections") {
  Rng rng(22);
  CHECK_THROWS_AS(equadratic_structure(classical("C")), Error);
  try {
    equadratic_structure(isotope(classical("H"), random_invertible(4, rng), random_invertible(4, rng)));
    FAIL("expected NotEQuadratic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEQuadratic);
  }
}
