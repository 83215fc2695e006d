#include "doctest.h"

#include "helpers.hpp"
#include "skyline/insertion.hpp"
#include "skyline/render.hpp"

using namespace skyline;

TEST_SUITE("render") {
  TEST_CASE("compact strings") {
    Filling const f(5, {{1}, {}, {}, {4, 4, 3}, {5, 2}});
    CHECK(to_string(f) == "{1:(1),4:(4,4,3),5:(5,2)}");
    CHECK(to_string(Filling::empty(3)) == "{}");
    CHECK(to_string(Ssyt({{1, 1, 2}, {2, 3}})) == "[[1,1,2],[2,3]]");
    CHECK(to_string(ReverseSsyt({{5, 3, 1}, {4}})) == "[[5,3,1],[4]]");
    CHECK(to_string(std::vector<int>{4, 3, 2}) == "(4,3,2)");
  }

  TEST_CASE("ascii diagram") {
    Filling const f(5, {{1}, {2}, {}, {4, 4, 4}, {5, 3}});
    std::string const expected = "          4\n"
                                 "          4  3\n"
                                 " 1  2     4  5\n"
                                 "[1][2][3][4][5]\n";
    CHECK(render_ascii(f) == expected);
    CHECK(render_ascii(f).find('\x1b') == std::string::npos);
    CHECK(render_ascii(f, true).find('\x1b') != std::string::npos);
    CHECK(render_ascii(Filling::empty(2)) == "[1][2]\n");
    // wider entries pad every cell
    auto const wide = render_ascii(Filling(10, {{}, {}, {}, {}, {}, {}, {}, {}, {}, {10}}));
    CHECK(wide.find("[ 1]") != std::string::npos);
    CHECK(wide.find("[10]") != std::string::npos);
  }

  TEST_CASE("tableau diagrams") {
    CHECK(render_ascii(Ssyt({{1, 1, 2}, {2, 3}})) == "2 3\n1 1 2\n");
  }

  TEST_CASE("trace text") {
    auto const g   = testing::golden("insert_k4.json");
    auto const res = insert(filling_from_json(g["filling"]), 4);
    CHECK(format_trace(res.trace) == g["trace_text"].get<std::string>());
  }
}
