#include <algorithm>
#include <map>

#include "doctest.h"

#include "skyline/composition.hpp"

using namespace skyline;

TEST_SUITE("shapes") {
  TEST_CASE("composition basics") {
    Composition const g{1, 0, 3, 2};
    CHECK(g.width() == 4);
    CHECK(g.sum() == 6);
    CHECK(g.max_part() == 3);
    CHECK(g.part(3) == 3);
    CHECK(g.part(9) == 0);
    CHECK(Composition{1, 0, 3} == Composition{1, 0, 3, 0});
    CHECK_THROWS_AS(Composition({1, -1}), std::invalid_argument);
    CHECK(to_string(g) == "(1,0,3,2)");
  }

  TEST_CASE("parse_composition") {
    CHECK(parse_composition("1,0,3,2") == Composition{1, 0, 3, 2});
    CHECK(parse_composition("(1,0,3,2)") == Composition{1, 0, 3, 2});
    CHECK(parse_composition("[2, 1]") == Composition{2, 1});
    CHECK(parse_composition("0").width() == 1);
    CHECK_THROWS_AS(parse_composition("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("1,-2"), std::invalid_argument);
  }

  TEST_CASE("partition validation") {
    CHECK_NOTHROW(Partition({3, 2, 2}));
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  }

  TEST_CASE("sort_to_partition and conjugate") {
    CHECK(sort_to_partition({1, 0, 3, 2}) == Partition{3, 2, 1});
    CHECK(sort_to_partition({0, 0}) == Partition{});
    CHECK(sort_to_partition(Composition{}) == Partition{});
    CHECK(sort_to_partition({0, 2, 0, 3, 1, 2, 0, 0, 1}) == Partition{3, 2, 2, 1, 1});
    CHECK(conjugate(Partition{3, 2, 1}) == Partition{3, 2, 1});
    CHECK(conjugate(Partition{4, 1}) == Partition{2, 1, 1, 1});
    for (int n = 0; n <= 8; ++n) {
      for (auto const& p : partitions(n)) {
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(conjugate(p).sum() == n);
      }
    }
  }

  TEST_CASE("rearrangements") {
    auto const r = rearrangements(Partition{2, 1}, 3);
    std::vector<Composition> const expected{
        {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}};
    CHECK(r == expected);
    CHECK(rearrangements(Partition{1, 1}, 3).size() == 3);
    CHECK(rearrangements(Partition{2, 2}, 3).size() == 3);
    CHECK(rearrangements(Partition{1}, 1) == std::vector<Composition>{{1}});
    CHECK(rearrangements(Partition{}, 2) == std::vector<Composition>{{0, 0}});
    CHECK_THROWS_AS(rearrangements(Partition{1, 1, 1}, 2), std::invalid_argument);
  }

  TEST_CASE("rearrangement counts are multinomial") {
    // m! / (m - l)! / prod(multiplicity!)
    auto factorial = [](int k) {
      long long f = 1;
      for (int i = 2; i <= k; ++i) {
        f *= i;
      }
      return f;
    };
    for (int n = 0; n <= 6; ++n) {
      for (auto const& p : partitions(n)) {
        for (std::size_t m = p.length(); m <= 6; ++m) {
          std::map<int, int> mult;
          for (int x : p) {
            ++mult[x];
          }
          mult[0] = static_cast<int>(m - p.length());
          long long expected = factorial(static_cast<int>(m));
          for (auto [part, k] : mult) {
            expected /= factorial(k);
          }
          auto const r = rearrangements(p, m);
          CHECK(static_cast<long long>(r.size()) == expected);
          for (auto const& g : r) {
            CHECK(sort_to_partition(g) == p);
            CHECK(g.width() == m);
          }
        }
      }
    }
  }

  TEST_CASE("compositions and partitions counts") {
    CHECK(compositions(3, 3).size() == 10);
    CHECK(compositions(0, 2).size() == 1);
    CHECK(compositions(5, 4).size() == 56);
    std::vector<std::size_t> const p{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) {
      CHECK(partitions(n).size() == p[static_cast<std::size_t>(n)]);
    }
    CHECK(partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  }

  TEST_CASE("reverse dominance") {
    CHECK(tail_sums({1, 0, 3, 2}) == std::vector<int>{6, 5, 5, 2});
    CHECK(reverse_dominance_leq({2, 1, 0}, {0, 1, 2}));
    CHECK_FALSE(reverse_dominance_leq({0, 1, 2}, {2, 1, 0}));
    CHECK(reverse_dominance_leq({1, 1, 1}, {1, 1, 1}));
    CHECK(reverse_dominance_leq({1, 1}, {1, 1, 0}));
    CHECK_THROWS_AS(reverse_dominance_leq({1}, {2}), std::invalid_argument);
  }

  TEST_CASE("reverse dominance is a partial order") {
    for (int sum = 0; sum <= 5; ++sum) {
      for (std::size_t width = 1; width <= 4; ++width) {
        auto const cs = compositions(sum, width);
        for (auto const& a : cs) {
          CHECK(reverse_dominance_leq(a, a));
          for (auto const& b : cs) {
            bool const ab = reverse_dominance_leq(a, b);
            if (ab && reverse_dominance_leq(b, a)) {
              CHECK(a == b);
            }
            if (!ab) {
              continue;
            }
            for (auto const& c : cs) {
              if (reverse_dominance_leq(b, c)) {
                CHECK(reverse_dominance_leq(a, c));
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("every composition is a rearrangement of its partition") {
    for (int sum = 0; sum <= 5; ++sum) {
      for (std::size_t width = 1; width <= 4; ++width) {
        for (auto const& g : compositions(sum, width)) {
          auto const lambda = sort_to_partition(g);
          auto const r      = rearrangements(lambda, width);
          CHECK(std::find(r.begin(), r.end(), g) != r.end());
          for (auto const& h : r) {
            CHECK(sort_to_partition(h) == lambda);
          }
        }
      }
    }
  }
}
