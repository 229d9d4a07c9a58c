#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "dsign/dim2.hpp"
#include "dsign/error.hpp"
#include "dsign/generators.hpp"

using namespace dsign;

namespace {

const Mat I2 = Mat::Identity(2, 2);
const Mat K = (Mat(2, 2) << 1, 0, 0, -1).finished();
const Mat S21 = (Mat(2, 2) << 2, 1, 1, 1).finished();

std::vector<std::string> names(const std::vector<GroupElement2D>& v) {
  std::vector<std::string> out;
  for (const auto& g : v) out.push_back(g.name);
  std::sort(out.begin(), out.end());
  return out;
}

// The twelve symmetries of the hexagon; automorphisms of a 2-d algebra preserving
// these normal forms must lie among them.
std::vector<Mat> hexagon() {
  std::vector<Mat> out;
  for (int k = 0; k < 6; ++k) {
    const double t = k * M_PI / 3.0;
    const Mat r = (Mat(2, 2) << std::cos(t), -std::sin(t), std::sin(t), std::cos(t)).finished();
    out.push_back(r);
    out.push_back(r * K);
  }
  return out;
}

}  // namespace

TEST_CASE("group matrices") {
  const Mat r = rotation_matrix();
  CHECK((r * r * r - I2).norm() < 1e-15);
  CHECK(r(0, 0) == -0.5);
  CHECK(r(1, 0) == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(conjugation_matrix() == K);
  CHECK(group_elements(Group2D::C2).size() == 2);
  CHECK(group_elements(Group2D::D3).size() == 6);
  CHECK(group_of_block(1, 1) == Group2D::D3);
  CHECK(group_of_block(0, 1) == Group2D::C2);
}

TEST_CASE("build2d") {
  CHECK(tensor_distance(build2d({0, 0, I2, I2}), classical("C")) == 0.0);
  CHECK(tensor_distance(build2d({1, 1, I2, I2}), isotope(classical("C"), K, K)) == 0.0);
  CHECK(block_of(build2d({1, 1, I2, I2})) == "--");
  CHECK(block_of(build2d({0, 1, I2, I2})) == "-+");
  CHECK(block_of(build2d({1, 0, S21, I2})) == "+-");
  CHECK(NormalForm2D{0, 1, I2, I2}.block().label() == "-+");
  CHECK_THROWS_AS(build2d({0, 0, K, I2}), Error);
}

TEST_CASE("groupoid and hom-sets") {
  CHECK(groupoid_hom(Group2D::C2, {I2, I2}, {I2, I2}).size() == 2);
  CHECK(groupoid_hom(Group2D::D3, {I2, I2}, {I2, I2}).size() == 6);
  CHECK(groupoid_hom(Group2D::C2, {I2, I2}, {S21, I2}).empty());

  CHECK(names(hom2d({0, 0, I2, I2}, {0, 0, I2, I2})) == std::vector<std::string>{"I", "K"});
  const auto d3 = hom2d({1, 1, I2, I2}, {1, 1, I2, I2});
  CHECK(d3.size() == 6);
  const Algebra ckk = build2d({1, 1, I2, I2});
  for (const auto& g : d3) CHECK(morphism_residual(g.matrix, ckk, ckk) <= 1e-12);
  CHECK(names(hom2d({0, 0, S21, I2}, {0, 0, S21, I2})) == std::vector<std::string>{"I"});

  try {
    hom2d({0, 0, I2, I2}, {1, 1, I2, I2});
    FAIL("expected BlockMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BlockMismatch);
  }
}

TEST_CASE("hom2d agrees with direct morphism search") {
  Rng rng(31);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 20; ++k) {
        const SpdPair x{random_spd1(2, rng), random_spd1(2, rng)};
        SpdPair y{random_spd1(2, rng), random_spd1(2, rng)};
        if (k % 2 == 0) {
          const auto els = group_elements(group_of_block(i, j));
          const Mat g = els[static_cast<std::size_t>(rng.index(static_cast<int>(els.size())))].matrix;
          y = {clean_spd1(g * x.a * g.transpose()), clean_spd1(g * x.b * g.transpose())};
        }
        const NormalForm2D src{i, j, x.a, x.b}, dst{i, j, y.a, y.b};
        const Algebra as = build2d(src), ad = build2d(dst);
        int direct = 0;
        for (const Mat& h : hexagon()) direct += is_morphism(h, as, ad, 1e-8);
        const auto homs = hom2d(src, dst, 1e-8);
        REQUIRE(static_cast<int>(homs.size()) == direct);
        for (const auto& h : homs) REQUIRE(is_morphism(h.matrix, as, ad, 1e-8));
      }
}

TEST_CASE("unitalization and the map to C") {
  const Unitalized uc = unitalize(classical("C"), Vec::Unit(2, 0));
  CHECK(tensor_distance(uc.alg, classical("C")) < 1e-15);
  const Unitalized uk = unitalize(build2d({1, 1, I2, I2}), Vec::Unit(2, 0));
  CHECK(tensor_distance(uk.alg, classical("C")) < 1e-15);
  CHECK((uk.unity - Vec::Unit(2, 0)).norm() < 1e-15);
  CHECK((iso_to_C(classical("C"), Vec::Unit(2, 0)) - I2).norm() < 1e-15);

  Rng rng(32);
  for (int k = 0; k < 100; ++k) {
    const Algebra a = random_2d_division(rng);
    const Vec x = rng.unit_vec(2);
    const Unitalized u = unitalize(a, x);
    REQUIRE((left_mult(u.alg, u.unity) - I2).norm() < 1e-8);
    REQUIRE((right_mult(u.alg, u.unity) - I2).norm() < 1e-8);
    const Mat f = iso_to_C(u.alg, u.unity);
    REQUIRE(morphism_residual(f, u.alg, classical("C")) < 1e-10);
    REQUIRE(f(1, 1) * f(0, 0) - f(0, 1) * f(1, 0) != 0.0);
  }
}

TEST_CASE("normal forms") {
  const Classified2D c = normal_form_2d(classical("C"));
  CHECK(c.nf.i == 0);
  CHECK(c.nf.j == 0);
  CHECK((c.nf.a - I2).norm() < 1e-12);
  CHECK((c.nf.b - I2).norm() < 1e-12);

  const Classified2D ckk = normal_form_2d(build2d({1, 1, I2, I2}));
  CHECK(ckk.nf.i == 1);
  CHECK(ckk.nf.j == 1);
  CHECK_FALSE(hom2d(ckk.nf, {1, 1, I2, I2}, 1e-8).empty());

  Rng rng(33);
  for (int k = 0; k < 100; ++k) {
    const NormalForm2D nf{rng.index(2), rng.index(2), random_spd1(2, rng), random_spd1(2, rng)};
    const Algebra a = transport(build2d(nf), random_invertible(2, rng, 0.2));
    const Classified2D r = normal_form_2d(a);
    REQUIRE(r.nf.i == nf.i);
    REQUIRE(r.nf.j == nf.j);
    REQUIRE(is_spd1(r.nf.a, 1e-9));
    REQUIRE(r.residual <= 1e-8);
    REQUIRE(morphism_residual(r.iso, a, build2d(r.nf)) <= 1e-8);
    REQUIRE_FALSE(hom2d(r.nf, nf, 1e-7).empty());
  }
  for (int k = 0; k < 100; ++k) {
    const Algebra a = random_2d_division(rng);
    const Classified2D r = normal_form_2d(a);
    REQUIRE(r.nf.block() == sign_pair(a));
    REQUIRE(r.residual <= 1e-8);
  }
}
