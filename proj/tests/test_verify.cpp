#include <stdexcept>

#include "doctest.h"

#include "skyline/filling.hpp"
#include "skyline/verify.hpp"

using namespace skyline;

TEST_SUITE("verify") {
  TEST_CASE("every suite passes at its default bounds") {
    for (auto const& name : suite_names()) {
      CAPTURE(name);
      auto const r = run_suite(name, {});
      CHECK(r.suite == name);
      CHECK(r.ok);
      CHECK(r.checked > 0);
      CHECK(r.counterexample.empty());
    }
  }

  TEST_CASE("serial and parallel runs agree") {
    for (auto const& name : suite_names()) {
      CAPTURE(name);
      CHECK(run_suite(name, {}, Execution::serial)
            == run_suite(name, {}, Execution::parallel));
    }
  }

  TEST_CASE("direct suite calls") {
    CHECK(verify_schur(0).ok);
    CHECK(verify_triangularity(1, 1).ok);
    auto const rt = verify_rsk_roundtrip(4, 3);
    CHECK(rt.ok);
    CHECK(rt.checked == all_matrices(4, 3).size());
    CHECK(verify_knuth(0, 1).ok);
    CHECK(verify_random(7, 50).checked == 50);
    CHECK(verify_random(7, 50) == verify_random(7, 50, Execution::serial));
  }

  TEST_CASE("all_matrices counts") {
    // every total up to the bound; total t on an i x i grid gives C(t + i*i - 1, t)
    CHECK(all_matrices(0, 3).size() == 1);
    CHECK(all_matrices(1, 3).size() == 1 + 9);
    CHECK(all_matrices(2, 2).size() == 1 + 4 + 10);
    for (auto const& a : all_matrices(3, 2)) {
      CHECK(a.total() <= 3);
    }
  }

  TEST_CASE("all_ssaf contains only SSAFs within bounds") {
    auto const fs = all_ssaf(4, 3);
    CHECK(!fs.empty());
    for (auto const& f : fs) {
      CHECK(is_ssaf(f));
      CHECK(f.size() <= 4);
      CHECK(f.basement_width() == 3);
    }
  }

  TEST_CASE("type A order condition needs adjacent rows") {
    // a1 = (2,3), a2 = (1,0), a3 = (1,1): a1 <= a2 but a3 > a1 fails
    Filling const f(2, {{1}, {2, 2, 1}});
    REQUIRE(is_ssaf(f));
    int const a1 = f.at({2, 3}), a2 = f.at({1, 0}), a3 = f.at({1, 1});
    CHECK(a1 <= a2);
    CHECK_FALSE(a3 > a1);
    CHECK(verify_lemmas(5, 5).ok);
  }

  TEST_CASE("run_suite rejects bad requests") {
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
    SuiteBounds big;
    big.max_n = 99;
    CHECK_THROWS_AS(run_suite("schur", big), std::invalid_argument);
    SuiteBounds zero;
    zero.width = 0;
    CHECK_THROWS_AS(run_suite("triangularity", zero), std::invalid_argument);
    SuiteBounds negative;
    negative.total = -1;
    CHECK_THROWS_AS(run_suite("rsk-roundtrip", negative), std::invalid_argument);
  }
}
