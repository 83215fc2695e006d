#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"

#include "helpers.hpp"
#include "oracles.hpp"
#include "skyline/enumerate.hpp"
#include "skyline/insertion.hpp"
#include "skyline/verify.hpp"

using namespace skyline;

namespace {
  using RowSets = std::vector<std::multiset<int>>;

  RowSets row_sets(oracle::Cols const& cols) {
    RowSets out;
    for (auto const& col : cols) {
      if (col.size() > out.size()) {
        out.resize(col.size());
      }
      for (std::size_t r = 0; r < col.size(); ++r) {
        out[r].insert(col[r]);
      }
    }
    return out;
  }

  RowSets row_sets(ReverseSsyt const& p) {
    RowSets out;
    for (auto const& row : p.rows()) {
      out.emplace_back(row.begin(), row.end());
    }
    return out;
  }

  // every reverse SSYT of shape lambda over [1, n], by filtering
  std::vector<ReverseSsyt> reverse_tableaux(Partition const& lambda, int n) {
    std::vector<std::vector<int>> t;
    for (int part : lambda) {
      t.emplace_back(static_cast<std::size_t>(part), 1);
    }
    std::vector<ReverseSsyt> out;
    while (true) {
      if (is_reverse_semistandard(t)) {
        out.emplace_back(t);
      }
      bool carried = true;
      for (auto& row : t) {
        for (auto& v : row) {
          if (v < n) {
            ++v;
            carried = false;
            break;
          }
          v = 1;
        }
        if (!carried) {
          break;
        }
      }
      if (carried) {
        return out;
      }
    }
  }
}  // namespace

TEST_SUITE("skyline-maps") {
  TEST_CASE("rho on worked examples") {
    auto const g = testing::golden("rho.json");
    CHECK(rho(filling_from_json(g["filling"])) == reverse_ssyt_from_json(g["rho"]));
    CHECK(rho(Filling::empty(3)) == ReverseSsyt());
    Filling const first(4, {{1}, {}, {3, 3, 3}, {4, 4}});
    CHECK(rho(first) == ReverseSsyt({{4, 3, 1}, {4, 3}, {3}}));
    CHECK_THROWS_AS(rho(Filling(2, {{}, {1}})), std::invalid_argument);
  }

  TEST_CASE("rho_inverse on worked examples") {
    auto const g = testing::golden("rho.json");
    CHECK(rho_inverse(reverse_ssyt_from_json(g["p"])) == filling_from_json(g["rho_inverse"]));
    CHECK(rho_inverse(ReverseSsyt(std::vector<std::vector<int>>{{4}})) == Filling(4, {{}, {}, {}, {4}}));
  }

  TEST_CASE("rho_inverse is the unique SSAF with the given row sets") {
    // all SSAFs with at most 5 cells and entries at most 5, from the oracle
    std::map<RowSets, std::vector<oracle::Cols>> by_rows;
    for (int n = 0; n <= 5; ++n) {
      for (auto const& gamma : compositions(n, 5)) {
        for (auto const& cols : oracle::ssaf(gamma.parts())) {
          by_rows[row_sets(cols)].push_back(testing::cols_of(testing::filling_of(cols, 5)));
        }
      }
    }
    std::size_t tableaux = 0;
    for (int n = 0; n <= 5; ++n) {
      for (auto const& lambda : partitions(n)) {
        for (auto const& p : reverse_tableaux(lambda, 5)) {
          ++tableaux;
          auto const f  = rho_inverse(p);
          auto const it = by_rows.find(row_sets(p));
          REQUIRE(it != by_rows.end());
          REQUIRE(it->second.size() == 1);
          REQUIRE(testing::cols_of(f) == it->second.front());
          REQUIRE(rho(f) == p);
        }
      }
    }
    // rho is a bijection: one SSAF per reverse tableau
    CHECK(tableaux == by_rows.size());
  }

  TEST_CASE("rho_inverse inverts rho and rho has the sorted heights") {
    for (auto const& f : all_ssaf(5, 5)) {
      auto const p = rho(f);
      REQUIRE(rho_inverse(p) == f);
      REQUIRE(p.column_lengths() == sort_to_partition(f.shape()));
    }
  }

  TEST_CASE("inserting 4 into the worked example") {
    auto const g = testing::golden("insert_k4.json");
    auto const r = insert(filling_from_json(g["filling"]), g["k"].get<int>());
    CHECK(r.filling == filling_from_json(g["result"]));
    CHECK(to_json(r.trace) == g["trace"]);
    std::vector<int> const seq{4, 3, 2};
    CHECK(r.trace.sequence == seq);
    std::vector<Cell> const path{{4, 3}, {5, 2}, {2, 1}};
    CHECK(r.trace.path == path);
    CHECK(r.trace.termination == Cell{2, 1});
  }

  TEST_CASE("insertion into the empty filling") {
    for (int k = 1; k <= 6; ++k) {
      auto const r = insert(Filling::empty(2), k);
      std::vector<std::vector<int>> cols(static_cast<std::size_t>(k));
      cols.back() = {k};
      CHECK(r.filling == Filling(static_cast<std::size_t>(k), cols));
      CHECK(r.trace.termination == Cell{k, 1});
    }
    CHECK_THROWS_AS(insert(Filling::empty(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(insert(Filling(2, {{}, {1}}), 1), std::invalid_argument);
  }

  TEST_CASE("deletion") {
    auto const g = testing::golden("insert_k4.json");
    auto const d = delete_from_column(filling_from_json(g["result"]), 2);
    CHECK(d.filling == filling_from_json(g["filling"]));
    CHECK(d.letter == 4);
    auto const single = delete_from_column(Filling(3, {{}, {}, {3}}), 3);
    CHECK(single.filling == Filling::empty(3));
    CHECK(single.letter == 3);
    auto const m = testing::golden("mapping.json");
    auto const n = delete_from_column(filling_from_json(m["filling"]),
                                      m["delete_column"].get<int>());
    CHECK(n.filling == filling_from_json(m["after_delete"]));
    CHECK(n.letter == m["deleted_letter"].get<int>());
    CHECK_THROWS_AS(delete_from_column(Filling::empty(2), 1), std::invalid_argument);
  }

  TEST_CASE("insertion traces, round trip and commutation with rho") {
    for (auto const& f : all_ssaf(6, 6)) {
      auto const p = rho(f);
      for (int k = 1; k <= 6; ++k) {
        auto const r = insert(f, k);
        REQUIRE(is_ssaf(r.filling));
        REQUIRE(r.filling.size() == f.size() + 1);
        // path strictly later in reading order at each step
        auto const cells = reading_cells(r.filling);
        auto pos = [&cells](Cell c) {
          return std::find(cells.begin(), cells.end(), c) - cells.begin();
        };
        for (std::size_t i = 1; i < r.trace.path.size(); ++i) {
          REQUIRE(pos(r.trace.path[i - 1]) < pos(r.trace.path[i]));
        }
        REQUIRE(r.trace.path.back() == r.trace.termination);
        REQUIRE(r.trace.sequence.size() == r.trace.path.size());
        // each x_i lands above the first occurrence of x_i after p_{i-1}
        Filling const wide  = f.widened(r.filling.basement_width());
        auto const    order = reading_cells(wide);
        for (std::size_t i = 0; i < r.trace.sequence.size(); ++i) {
          std::size_t start = 0;
          if (i > 0) {
            start = static_cast<std::size_t>(
                        std::find(order.begin(), order.end(), r.trace.path[i - 1])
                        - order.begin())
                    + 1;
          }
          for (std::size_t j = start; j < order.size(); ++j) {
            if (wide.at(order[j]) == r.trace.sequence[i]) {
              REQUIRE(r.trace.path[i].row > order[j].row);
              break;
            }
          }
        }
        auto const d = delete_from_column(r.filling, r.trace.termination.column);
        REQUIRE(d.filling == f);
        REQUIRE(d.letter == k);
        REQUIRE(rho(r.filling) == reverse_schensted_insert(p, k).tableau);
      }
    }
  }
}
