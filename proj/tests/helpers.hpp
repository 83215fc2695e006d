// Shared test utilities: golden files and conversions to oracle types.

#ifndef SKYLINE_TESTS_HELPERS_HPP_
#define SKYLINE_TESTS_HELPERS_HPP_

#include <fstream>
#include <stdexcept>
#include <string>

#include "oracles.hpp"
#include "skyline/filling.hpp"
#include "skyline/json_io.hpp"

namespace testing {

  inline skyline::json golden(std::string const& name) {
    std::ifstream in(std::string(SKYLINE_GOLDEN_DIR) + "/" + name);
    if (!in) {
      throw std::runtime_error("missing golden file " + name);
    }
    return skyline::json::parse(in);
  }

  inline oracle::Cols cols_of(skyline::Filling const& f) {
    auto cols = f.columns();
    while (!cols.empty() && cols.back().empty()) {
      cols.pop_back();
    }
    return cols;
  }

  inline skyline::Filling filling_of(oracle::Cols const& cols, std::size_t width) {
    return skyline::Filling(width, cols);
  }

}  // namespace testing

#endif  // SKYLINE_TESTS_HELPERS_HPP_
