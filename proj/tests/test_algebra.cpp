#include <cmath>

#include <doctest.h>

#include "dsign/algebra.hpp"
#include "dsign/error.hpp"
#include "dsign/generators.hpp"

using namespace dsign;

namespace {

const Mat K2 = (Mat(2, 2) << 1, 0, 0, -1).finished();

// Hamilton product written out by hand, independent of the structure tensor.
Vec hamilton(const Vec& p, const Vec& q) {
  Vec r(4);
  r << p(0) * q(0) - p(1) * q(1) - p(2) * q(2) - p(3) * q(3),
      p(0) * q(1) + p(1) * q(0) + p(2) * q(3) - p(3) * q(2),
      p(0) * q(2) - p(1) * q(3) + p(2) * q(0) + p(3) * q(1),
      p(0) * q(3) + p(1) * q(2) - p(2) * q(1) + p(3) * q(0);
  return r;
}

Sign brute_ell(const Algebra& a, const Vec& x) { return det(left_mult(a, x)) > 0 ? Sign::Plus : Sign::Minus; }

}  // namespace

TEST_CASE("classical tables") {
  const Algebra c = classical("C");
  CHECK(c.mul(basis_vec(2, 1), basis_vec(2, 1)).isApprox(-basis_vec(2, 0)));

  const Algebra h = classical("H");
  CHECK(h.product(1, 2).isApprox(basis_vec(4, 3)));
  CHECK(h.product(2, 1).isApprox(-basis_vec(4, 3)));
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const Vec p = rng.uniform_vec(4), q = rng.uniform_vec(4);
    REQUIRE((h.mul(p, q) - hamilton(p, q)).norm() < 1e-14);
  }

  const Algebra o = classical("O");
  CHECK(is_division(o, DivisionMode::Sampled, 10000).verdict == DivisionVerdict::ProbablyDivision);
  for (int k = 0; k < 1000; ++k) {
    const Vec x = rng.uniform_vec(8), y = rng.uniform_vec(8);
    REQUIRE(std::abs(o.mul(x, y).norm() - x.norm() * y.norm()) < 1e-12);
  }
  CHECK_THROWS_AS(classical("R"), Error);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Algebra(3, std::vector<double>(27, 0.0)), Error);
  CHECK_THROWS_AS(Algebra(2, std::vector<double>(7, 0.0)), Error);
  CHECK_THROWS_AS(Algebra(2, std::vector<double>{1, 0, 0, 1, 0, 1, -1, NAN}), Error);
  CHECK_NOTHROW(Algebra(1, std::vector<double>{1.0}));
}

TEST_CASE("multiplication operators") {
  const Mat li = left_mult(classical("C"), basis_vec(2, 1));
  CHECK(li.isApprox((Mat(2, 2) << 0, -1, 1, 0).finished()));
  CHECK(left_mult(classical("H"), basis_vec(4, 0)).isApprox(Mat::Identity(4, 4)));
  CHECK(det(left_mult(classical("H"), Vec::Ones(4))) == doctest::Approx(16.0));
}

TEST_CASE("double sign examples") {
  const Algebra c = classical("C");
  CHECK(block_of(c) == "++");
  CHECK(block_of(classical("H")) == "++");
  CHECK(block_of(classical("O")) == "++");

  const Algebra ckk = isotope(c, K2, K2);
  CHECK(block_of(ckk) == "--");
  Rng rng(4);
  for (int k = 0; k < 20; ++k) CHECK(brute_ell(ckk, rng.unit_vec(2)) == Sign::Minus);

  const Algebra cik = isotope(c, Mat::Identity(2, 2), K2);
  CHECK(block_of(cik) == "-+");
  CHECK(block_of(opposite(cik)) == "+-");

  CHECK_THROWS_AS(sign_pair(Algebra(1, {1.0})), Error);
  try {
    // Split algebra: L_{e1} is singular, so the basis evaluation already fails.
    sign_pair(Algebra(2, {1, 0, 0, 0, 0, 0, 0, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateSign);
  }
}

TEST_CASE("sign pair reports inconsistency on non-division input") {
  // Split-complex table: det L_a = a0^2 - a1^2 changes sign.
  const Algebra a = Algebra::from_products(2, [](int i, int j) {
    Vec v = Vec::Zero(2);
    if (i == j) v(0) = 1.0; else v(1) = 1.0;
    return v;
  });
  try {
    sign_pair(a);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::SignInconsistent || e.kind() == ErrorKind::DegenerateSign));
  }
}

TEST_CASE("isotopes") {
  Rng rng(2);
  const Algebra h = classical("H");
  CHECK(tensor_distance(isotope(h, Mat::Identity(4, 4), Mat::Identity(4, 4)), h) == 0.0);

  const Mat s = random_invertible(4, rng), t = random_invertible(4, rng);
  const Mat s2 = random_invertible(4, rng), t2 = random_invertible(4, rng);
  CHECK(tensor_distance(isotope(isotope(h, s, t), s2, t2), isotope(h, s * s2, t * t2)) < 1e-12);

  // C_{K,K}: x o y = conj(x) conj(y).
  const Algebra ckk = isotope(classical("C"), K2, K2);
  CHECK(ckk.product(0, 0).isApprox(basis_vec(2, 0)));
  CHECK(ckk.product(1, 1).isApprox(-basis_vec(2, 0)));
  CHECK(ckk.product(0, 1).isApprox(-basis_vec(2, 1)));

  CHECK_THROWS_AS(isotope(h, Mat::Zero(4, 4), t), Error);

  for (int k = 0; k < 300; ++k) {
    const int n = (k % 3 == 0) ? 2 : (k % 3 == 1 ? 4 : 8);
    const Algebra a = random_division_algebra(n, rng);
    const Mat ss = random_invertible(n, rng), tt = random_invertible(n, rng);
    const SignPair p = sign_pair(a, {50});
    const SignPair q = sign_pair(isotope(a, ss, tt), {50});
    REQUIRE(q.ell == p.ell * (det(tt) > 0 ? Sign::Plus : Sign::Minus));
    REQUIRE(q.r == p.r * (det(ss) > 0 ? Sign::Plus : Sign::Minus));
  }
}

TEST_CASE("opposite and transport") {
  Rng rng(6);
  const Algebra c = classical("C");
  CHECK(tensor_distance(opposite(c), c) == 0.0);
  for (int n : {2, 4, 8}) {
    const Algebra a = random_division_algebra(n, rng);
    CHECK(tensor_distance(opposite(opposite(a)), a) == 0.0);
    CHECK(tensor_distance(transport(a, Mat::Identity(n, n)), a) < 1e-15);
    const Mat f = random_invertible(n, rng);
    const Algebra b = transport(a, f);
    CHECK(is_morphism(f, a, b));
    CHECK(sign_pair(b) == sign_pair(a));
  }
}

TEST_CASE("morphism checks") {
  const Algebra c = classical("C"), h = classical("H");
  CHECK(is_morphism(Mat::Identity(2, 2), c, c));
  CHECK(is_morphism(K2, c, c));
  Mat kh = Mat::Identity(4, 4);
  kh(1, 1) = -1;
  CHECK_FALSE(is_morphism(kh, h, h));
  CHECK_THROWS_AS(morphism_residual(Mat::Zero(2, 2), c, c), Error);
}

TEST_CASE("division checks") {
  CHECK(is_division(classical("C"), DivisionMode::Exact2d).verdict == DivisionVerdict::Division);
  const Algebra split(2, {1, 0, 0, 0, 0, 0, 0, 1});
  CHECK(is_division(split, DivisionMode::Exact2d).verdict == DivisionVerdict::NotDivision);
  CHECK(is_division(split, DivisionMode::Sampled).verdict == DivisionVerdict::NotDivision);
  Rng rng(9);
  const Algebra hst = isotope(classical("H"), random_invertible(4, rng), random_invertible(4, rng));
  CHECK(is_division(hst, DivisionMode::Sampled).verdict == DivisionVerdict::ProbablyDivision);
  CHECK_THROWS_AS(is_division(hst, DivisionMode::Exact2d), Error);
  CHECK(to_string(DivisionVerdict::ProbablyDivision) == "probably_division");
}

TEST_CASE("unities") {
  const Algebra c = classical("C");
  const Unities u = find_unities(c);
  REQUIRE(u.two_sided);
  CHECK(u.two_sided->isApprox(basis_vec(2, 0)));

  const Unities ukk = find_unities(isotope(c, K2, K2));
  CHECK_FALSE(ukk.left);
  CHECK_FALSE(ukk.right);

  // x o y = x conj(y): x o 1 = x, while 1 o y = conj(y).
  const Unities uik = find_unities(isotope(c, Mat::Identity(2, 2), K2));
  CHECK_FALSE(uik.left);
  REQUIRE(uik.right);
  CHECK(uik.right->isApprox(basis_vec(2, 0)));

  Rng rng(12);
  for (int k = 0; k < 60; ++k) {
    const int n = k % 3 == 0 ? 2 : (k % 3 == 1 ? 4 : 8);
    const Algebra base = random_division_algebra(n, rng);
    const Vec w = rng.unit_vec(n);
    const Algebra left = isotope(base, random_invertible(n, rng, 0.2), left_mult(base, w).inverse());
    const Algebra right = isotope(base, right_mult(base, w).inverse(), random_invertible(n, rng, 0.2));
    REQUIRE(find_unities(left, 1e-8).left);
    REQUIRE(find_unities(right, 1e-8).right);
    REQUIRE(sign_pair(left, {100}).ell == Sign::Plus);
    REQUIRE(sign_pair(right, {100}).r == Sign::Plus);
  }
}

TEST_CASE("centre") {
  const Algebra h = classical("H");
  const Mat zh = center(h);
  REQUIRE(zh.cols() == 1);
  CHECK(std::abs(std::abs(zh(0, 0)) - 1.0) < 1e-12);
  CHECK(center(classical("C")).cols() == 2);
  CHECK(center(classical("O")).cols() == 1);
  CHECK(associative_center(h).cols() == 1);

  // In H_{k,k} the unit still commutes with everything but no longer associates.
  Mat kap = -Mat::Identity(4, 4);
  kap(0, 0) = 1;
  const Algebra hkk = isotope(h, kap, kap);
  CHECK(center(hkk).cols() == 1);
  CHECK(associative_center(hkk).cols() == 0);
}

TEST_CASE("block labels parse") {
  CHECK(parse_block("+-") == SignPair{Sign::Plus, Sign::Minus});
  CHECK(parse_block("--").label() == "--");
  CHECK_THROWS_AS(parse_block("+"), Error);
}
