#include <set>

#include <doctest.h>

#include "dsign/verify.hpp"

using namespace dsign;

TEST_CASE("verify covers the checklist and passes") {
  const Report r = run_verify({42, 200, 1e-9});
  CHECK(r.passed());
  std::set<std::string> names;
  for (const auto& c : r.results) {
    CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
    CHECK_FALSE(c.anchor.empty());
    names.insert(c.name);
  }
  for (const auto& n : invariant_checklist()) CHECK_MESSAGE(names.count(n) == 1, n);
  CHECK(r.results.back().name == "checklist");
}

TEST_CASE("verify is deterministic per seed") {
  const VerifyOptions o{7, 100, 1e-9};
  CHECK(to_text(run_verify(o)) == to_text(run_verify(o)));
  CHECK(to_json(run_verify(o)).dump() == to_json(run_verify(o)).dump());
  const auto j = to_json(run_verify(o));
  CHECK(j["seed"] == 7);
  CHECK(j["results"].size() == invariant_checklist().size() + 1);
}
