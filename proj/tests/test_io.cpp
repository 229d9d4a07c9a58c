#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "dsign/error.hpp"
#include "dsign/generators.hpp"
#include "dsign/io.hpp"

using namespace dsign;
using io::json;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::VerificationFailed;
}

}  // namespace

TEST_CASE("algebra documents round-trip exactly") {
  Rng rng(1);
  for (int k = 0; k < 60; ++k) {
    const Algebra a = random_division_algebra(k % 3 == 0 ? 2 : (k % 3 == 1 ? 4 : 8), rng);
    const Algebra b = io::algebra_from_json(json::parse(io::to_json(a).dump()));
    REQUIRE(a.structure() == b.structure());
    REQUIRE(a.label() == b.label());
  }
  const json h = io::to_json(classical("H"));
  CHECK(h["dim"] == 4);
  CHECK(h["labels"] == json({"1", "i", "j", "k"}));
  // e_1 e_2 = e_3 in the nested [i][j][k] layout.
  CHECK(h["structure"][1][2][3] == 1.0);
}

TEST_CASE("malformed algebra documents") {
  CHECK(kind_of([] { io::algebra_from_json(json::parse(R"({"dim": 2})")); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { io::algebra_from_json(json::parse(R"({"dim": 2, "structure": [[[1,0],[0,1]]]})")); }) ==
        ErrorKind::BadInput);
  CHECK(kind_of([] { io::algebra_from_json(json::parse(R"({"dim": 3, "structure": []})")); }) != ErrorKind::VerificationFailed);
  CHECK(kind_of([] {
          io::algebra_from_json(json::parse(R"({"dim": 2, "structure": [[[1,"x"],[0,1]],[[0,1],[-1,0]]]})"));
        }) == ErrorKind::BadInput);
}

TEST_CASE("other documents") {
  Rng rng(2);
  const DecoratedAlgebra x = random_decoration(random_classical_isotope(8, rng), 3, rng);
  const DecoratedAlgebra y = io::decorated_from_json(json::parse(io::to_json(x).dump()));
  CHECK(y.alg().structure() == x.alg().structure());
  CHECK(y.u() == x.u());
  CHECK(y.v() == x.v());

  const NormalForm2D nf{1, 0, random_spd1(2, rng), random_spd1(2, rng)};
  const NormalForm2D back = io::normal_form_from_json(json::parse(io::to_json(nf).dump()));
  CHECK(back.i == 1);
  CHECK(back.j == 0);
  CHECK(back.a == nf.a);
  CHECK(back.b == nf.b);

  const io::MatrixPair p{random_invertible(4, rng), random_invertible(4, rng)};
  const io::MatrixPair q = io::pair_from_json(json::parse(io::to_json(p).dump()));
  CHECK(q.s == p.s);
  CHECK(q.t == p.t);
  CHECK(kind_of([] { io::pair_from_json(json::parse(R"({"S": [[1,0],[0,1]]})")); }) == ErrorKind::BadInput);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "dsign_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "o.json";
  io::write_file(path, io::to_json(classical("O")));
  CHECK(io::algebra_from_json(io::read_file(path)).structure() == classical("O").structure());
  CHECK(kind_of([&] { io::read_file(dir / "missing.json"); }) == ErrorKind::BadInput);
  {
    std::ofstream(dir / "broken.json") << "{ not json";
  }
  CHECK(kind_of([&] { io::read_file(dir / "broken.json"); }) == ErrorKind::BadInput);
  std::filesystem::remove_all(dir);
}
