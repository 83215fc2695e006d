#include <random>

#include "doctest.h"

#include "helpers.hpp"
#include "oracles.hpp"
#include "skyline/enumerate.hpp"
#include "skyline/filling.hpp"

using namespace skyline;

namespace {
  // nine columns, used for reading order and attacking pairs
  Filling sigma() {
    return Filling(9, {{}, {2, 2}, {}, {4, 3, 3}, {5}, {6, 1}, {}, {}, {9}});
  }

  // the eight SSAFs of shape (1,0,3,2)
  std::vector<Filling> ssafs_1032() {
    return {Filling(4, {{1}, {}, {3, 3, 3}, {4, 4}}),
            Filling(4, {{1}, {}, {3, 3, 2}, {4, 4}}),
            Filling(4, {{1}, {}, {3, 3, 1}, {4, 4}}),
            Filling(4, {{1}, {}, {3, 3, 3}, {4, 2}}),
            Filling(4, {{1}, {}, {3, 3, 2}, {4, 2}}),
            Filling(4, {{1}, {}, {3, 3, 1}, {4, 2}}),
            Filling(4, {{1}, {}, {3, 2, 2}, {4, 4}}),
            Filling(4, {{1}, {}, {3, 2, 1}, {4, 4}})};
  }
}  // namespace

TEST_SUITE("fillings") {
  TEST_CASE("construction validates entries") {
    CHECK_THROWS_AS(Filling(2, {{3}}), std::invalid_argument);
    CHECK_THROWS_AS(Filling(1, {{1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(Filling(2, {{0}}), std::invalid_argument);
    Filling const f(3, {{1}});
    CHECK(f.shape() == Composition{1, 0, 0});
    CHECK(f.at({2, 0}) == 2);
    CHECK(f.at({2, 1}) == 0);
    CHECK(f.at({4, 0}) == 0);
    CHECK(Filling(3, {{1}}) == Filling(1, {{1}}));
  }

  TEST_CASE("reading order") {
    std::vector<Cell> const a{{1, 1}, {1, 0}};
    CHECK(reading_cells(Filling(1, {{1}})) == a);
    std::vector<Cell> const b{{2, 1}, {1, 0}, {2, 0}};
    CHECK(reading_cells(Filling(2, {{}, {2}})) == b);
    CHECK(reading_word(sigma()) == std::vector<int>{3, 2, 3, 1, 2, 4, 5, 6, 9});
    CHECK(reading_word(Filling::empty(3)).empty());
    CHECK(reading_word(ssafs_1032()[0]) == std::vector<int>{3, 3, 4, 1, 3, 4});
  }

  TEST_CASE("content and weight") {
    std::multiset<int> const c{1, 2, 2, 3, 3, 4, 5, 6, 9};
    CHECK(content(sigma()) == c);
    CHECK(content(Filling::empty(2)).empty());
    // the fourth one holds three 3s
    std::multiset<int> const fourth{1, 2, 3, 3, 3, 4};
    CHECK(content(ssafs_1032()[3]) == fourth);
    CHECK(weight(ssafs_1032()[3], 4) == std::vector<int>{1, 1, 3, 1});
    CHECK_THROWS_AS(weight(sigma(), 8), std::invalid_argument);
  }

  TEST_CASE("attacking") {
    CHECK(attacking({1, 1}, {3, 1}));
    CHECK(attacking({3, 2}, {1, 1}));
    CHECK(attacking({1, 1}, {3, 2}));
    CHECK_FALSE(attacking({1, 2}, {3, 1}));
    CHECK_FALSE(attacking({1, 3}, {1, 1}));
    for (auto const& f : ssafs_1032()) {
      CHECK(is_non_attacking(f));
    }
    // (2,1) holding 1 attacks the basement cell (1,0)
    CHECK_FALSE(is_non_attacking(Filling(2, {{}, {1}})));
  }

  TEST_CASE("descents, leg and maj") {
    CHECK(descent_set(Filling(1, {{1}})).empty());
    std::vector<Cell> const d{{2, 1}};
    CHECK(descent_set(Filling(3, {{}, {3}})) == d);
    Filling const g(3, {{}, {2, 3}});
    std::vector<Cell> const d2{{2, 2}};
    CHECK(descent_set(g) == d2);
    CHECK(leg(g, {2, 2}) == 0);
    CHECK(leg(g, {2, 1}) == 1);
    CHECK(leg(g, {2, 0}) == 2);
    CHECK(maj(g) == 1);
    CHECK(maj(Filling::empty(0)) == 0);
    for (auto const& f : ssafs_1032()) {
      CHECK(descent_set(f).empty());
      CHECK(maj(f) == 0);
    }
  }

  TEST_CASE("triples") {
    CHECK(triples(Filling::empty(3)).size() == 0);
    // first SSAF of (1,0,3,2), columns 1 and 3, rows 0 and 1: type B
    auto const ts = triples(ssafs_1032()[0]);
    bool        found = false;
    for (auto const& t : ts) {
      if (t.kind == TripleKind::type_b && t.cells[0] == Cell{1, 0}
          && t.cells[1] == Cell{3, 0} && t.cells[2] == Cell{3, 1}) {
        found = true;
        CHECK(t.inverted);
      }
    }
    CHECK(found);
    // constant filling, column 1 over column 2: alpha over alpha, delta
    // to the right
    for (auto const& t : triples(constant_filling({2, 1}))) {
      if (t.kind == TripleKind::type_a) {
        CHECK(t.inverted);
      }
    }
    CHECK(is_inversion_triple(TripleKind::type_a, 1, 2, 1));
    CHECK(is_inversion_triple(TripleKind::type_b, 1, 3, 3));
  }

  TEST_CASE("inv + coinv equals the number of triples") {
    Filling const f(2, {{1}, {2}});
    auto const    ts = triples(f);
    CHECK(inv(f) + coinv(f) == ts.size());
    auto const [i, c] = oracle::inv_coinv(testing::cols_of(f), 2);
    CHECK(inv(f) == i);
    CHECK(coinv(f) == c);
    CHECK(inv(Filling::empty(2)) == 0);
    CHECK(coinv(Filling::empty(2)) == 0);
  }

  TEST_CASE("triple statistics agree with the definitional oracle") {
    std::mt19937                       rng(7);
    std::uniform_int_distribution<int> height(0, 3);
    for (int trial = 0; trial < 2000; ++trial) {
      int const                     w = 1 + trial % 5;
      std::uniform_int_distribution<int> entry(1, w);
      std::vector<std::vector<int>> cols(static_cast<std::size_t>(w));
      for (auto& col : cols) {
        col.resize(static_cast<std::size_t>(height(rng)));
        for (auto& v : col) {
          v = entry(rng);
        }
      }
      Filling const f(static_cast<std::size_t>(w), cols);
      auto const [i, c] = oracle::inv_coinv(testing::cols_of(f), w);
      REQUIRE(inv(f) == i);
      REQUIRE(coinv(f) == c);
      REQUIRE(is_ssaf(f) == oracle::is_ssaf(testing::cols_of(f), w));
      REQUIRE(inv(f) + coinv(f) == triples(f).size());
    }
  }

  TEST_CASE("is_ssaf") {
    for (auto const& f : ssafs_1032()) {
      CHECK(is_ssaf(f));
    }
    CHECK_FALSE(is_ssaf(Filling(2, {{2}})));
    // only those eight pass among every assignment
    std::size_t count = 0;
    for (auto const& cols : oracle::ssaf({1, 0, 3, 2})) {
      CHECK(is_ssaf(Filling(4, cols)));
      ++count;
    }
    CHECK(count == 8);
  }

  TEST_CASE("structural invariants of SSAFs") {
    for (int n = 0; n <= 5; ++n) {
      for (auto const& gamma : compositions(n, 4)) {
        for (auto const& f : enumerate_ssaf(gamma)) {
          CHECK(reading_word(f).size() == static_cast<std::size_t>(n));
          CHECK(content(f).size() == static_cast<std::size_t>(n));
          CHECK(is_non_attacking(f));
          for (int c = 1; c <= 4; ++c) {
            if (f.height(c) > 0) {
              CHECK(f.at({c, 1}) == c);
            }
          }
        }
      }
    }
  }
}
