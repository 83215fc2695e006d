#include "skyline/insertion.hpp"

#include <algorithm>   // for sort, max
#include <functional>  // for greater
#include <stdexcept>   // for invalid_argument, logic_error
#include <string>      // for to_string

namespace skyline {

  ReverseSsyt rho(Filling const& f) {
    if (!is_ssaf(f)) {
      throw std::invalid_argument("rho: filling is not an SSAF");
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(f.max_height()));
    int const                     w = static_cast<int>(f.basement_width());
    for (int col = 1; col <= w; ++col) {
      for (int row = 1; row <= f.height(col); ++row) {
        rows[static_cast<std::size_t>(row - 1)].push_back(f.at({col, row}));
      }
    }
    for (auto& row : rows) {
      std::sort(row.begin(), row.end(), std::greater<>());
    }
    return ReverseSsyt(std::move(rows));
  }

  Filling rho_inverse(ReverseSsyt const& p) {
    int max_entry = 0;
    for (auto const& row : p.rows()) {
      for (int v : row) {
        max_entry = std::max(max_entry, v);
      }
    }
    Filling f = Filling::empty(static_cast<std::size_t>(max_entry));
    int const w = max_entry;
    for (std::size_t r = 0; r < p.num_rows(); ++r) {
      int const target = static_cast<int>(r);  // height of eligible columns
      // rows of a reverse SSYT are strictly decreasing: largest first is
      // left to right
      for (int alpha : p.rows()[r]) {
        int chosen = 0;
        for (int col = 1; col <= w; ++col) {
          if (f.height(col) == target && f.at({col, target}) >= alpha) {
            chosen = col;
            break;
          }
        }
        if (chosen == 0) {
          throw std::logic_error("rho_inverse: no column accepts entry "
                                 + std::to_string(alpha));
        }
        f.push(chosen, alpha);
      }
    }
    return f;
  }

  namespace detail {

    InsertionResult insert_unchecked(Filling const& f, int k) {
      if (k < 1) {
        throw std::invalid_argument("insert: letter must be positive");
      }
      Filling out = f.widened(std::max<std::size_t>(f.basement_width(),
                                                    static_cast<std::size_t>(k)));
      // Cells after the current scan position are never modified, so the
      // reading order of the input drives the whole scan.
      auto const     cells = reading_cells(out);
      InsertionTrace trace;
      int            x = k;
      std::size_t    j = 0;
      trace.sequence.push_back(x);
      while (true) {
        while (j < cells.size()
               && !(out.at(cells[j]) >= x && out.at(cells[j].above()) < x)) {
          ++j;
        }
        if (j == cells.size()) {
          throw std::logic_error("insert: scan ran past the basement");
        }
        Cell const target = cells[j].above();
        int const  bumped = out.at(target);
        if (bumped == 0) {
          out.push(target.column, x);
        } else {
          out.set(target, x);
        }
        trace.path.push_back(target);
        if (bumped == 0) {
          trace.termination = target;
          break;
        }
        x = bumped;
        trace.sequence.push_back(x);
        ++j;
      }
      return {std::move(out), std::move(trace)};
    }

    DeletionResult delete_unchecked(Filling const& f, int column) {
      int const h = f.height(column);
      if (h == 0) {
        throw std::invalid_argument("delete_from_column: column "
                                    + std::to_string(column) + " is empty");
      }
      auto const  cells = reading_cells(f);
      Cell const  top{column, h};
      std::size_t pos = 0;
      while (cells[pos] != top) {
        ++pos;
      }
      Filling out = f;
      int     v   = out.pop(column);
      for (std::size_t i = pos; i-- > 0;) {
        Cell const c = cells[i];
        if (c.is_basement()) {
          continue;
        }
        int const e = out.at(c);
        if (e > v && out.at(c.above()) <= v) {
          out.set(c, v);
          v = e;
        }
      }
      return {std::move(out), v};
    }

  }  // namespace detail

  InsertionResult insert(Filling const& f, int k) {
    if (!is_ssaf(f)) {
      throw std::invalid_argument("insert: filling is not an SSAF");
    }
    return detail::insert_unchecked(f, k);
  }

  DeletionResult delete_from_column(Filling const& f, int column) {
    if (!is_ssaf(f)) {
      throw std::invalid_argument("delete_from_column: filling is not an SSAF");
    }
    return detail::delete_unchecked(f, column);
  }

}  // namespace skyline
