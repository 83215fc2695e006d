#include "skyline/bijection.hpp"

#include <algorithm>  // for sort, max
#include <stdexcept>  // for invalid_argument, logic_error
#include <string>     // for to_string

#include "skyline/insertion.hpp"

namespace skyline {

  ////////////////////////////////////////////////////////////////////////
  // NatMatrix / TwoLineArray
  ////////////////////////////////////////////////////////////////////////

  void NatMatrix::add(int row, int column, int count) {
    if (row < 1 || column < 1) {
      throw std::invalid_argument("NatMatrix: indices must be positive");
    }
    if (count < 0) {
      throw std::invalid_argument("NatMatrix: counts must be non-negative");
    }
    if (count > 0) {
      _entries[{row, column}] += count;
    }
  }

  int NatMatrix::at(int row, int column) const {
    auto it = _entries.find({row, column});
    return it == _entries.end() ? 0 : it->second;
  }

  int NatMatrix::total() const noexcept {
    int t = 0;
    for (auto const& [key, count] : _entries) {
      t += count;
    }
    return t;
  }

  NatMatrix NatMatrix::transposed() const {
    NatMatrix t;
    for (auto const& [key, count] : _entries) {
      t.add(key.second, key.first, count);
    }
    return t;
  }

  void TwoLineArray::validate() const {
    if (top.size() != bottom.size()) {
      throw std::invalid_argument("two-line array: lines differ in length");
    }
    for (std::size_t r = 0; r < top.size(); ++r) {
      if (top[r] < 1 || bottom[r] < 1) {
        throw std::invalid_argument("two-line array: letters must be positive");
      }
      if (r > 0) {
        if (top[r - 1] > top[r]) {
          throw std::invalid_argument(
              "two-line array: top line must be weakly increasing");
        }
        if (top[r - 1] == top[r] && bottom[r - 1] > bottom[r]) {
          throw std::invalid_argument(
              "two-line array: bottom letters under equal top letters must be "
              "weakly increasing");
        }
      }
    }
  }

  TwoLineArray matrix_to_array(NatMatrix const& a) {
    TwoLineArray w;
    // std::map order on (row, column) is the required scan order
    for (auto const& [key, count] : a.entries()) {
      for (int c = 0; c < count; ++c) {
        w.top.push_back(key.first);
        w.bottom.push_back(key.second);
      }
    }
    return w;
  }

  NatMatrix array_to_matrix(TwoLineArray const& w) {
    w.validate();
    NatMatrix a;
    for (std::size_t r = 0; r < w.size(); ++r) {
      a.add(w.top[r], w.bottom[r]);
    }
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // psi
  ////////////////////////////////////////////////////////////////////////

  Filling psi(Ssyt const& t) {
    Word const w = col_word(t);
    Filling    f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      f = detail::insert_unchecked(f, *it).filling;
    }
    return f;
  }

  namespace {
    // Nonzero columns, shortest first; among equal heights the rightmost
    // counts as shorter.
    std::vector<int> deletion_order(Filling const& f) {
      std::vector<int> cols;
      int const        w = static_cast<int>(f.basement_width());
      for (int c = 1; c <= w; ++c) {
        if (f.height(c) > 0) {
          cols.push_back(c);
        }
      }
      std::sort(cols.begin(), cols.end(), [&f](int a, int b) {
        if (f.height(a) != f.height(b)) {
          return f.height(a) < f.height(b);
        }
        return a > b;
      });
      return cols;
    }
  }  // namespace

  Ssyt psi_inverse(Filling const& f) {
    if (!is_ssaf(f)) {
      throw std::invalid_argument("psi_inverse: filling is not an SSAF");
    }
    std::vector<Word> columns;  // of T, each top to bottom
    Filling           cur = f;
    while (cur.size() > 0) {
      Word column;
      for (int c : deletion_order(cur)) {
        auto d = detail::delete_unchecked(cur, c);
        cur    = std::move(d.filling);
        column.push_back(d.letter);
      }
      columns.push_back(std::move(column));
    }
    return ssyt_from_columns(columns);
  }

  ////////////////////////////////////////////////////////////////////////
  // phi
  ////////////////////////////////////////////////////////////////////////

  FillingPair phi(TwoLineArray const& w) {
    w.validate();
    Filling f;
    Filling g;
    for (std::size_t r = w.size(); r-- > 0;) {
      auto ins  = detail::insert_unchecked(f, w.bottom[r]);
      f         = std::move(ins.filling);
      int const h = ins.trace.termination.row;  // height of the grown column
      int const letter = w.top[r];
      g = g.widened(std::max<std::size_t>(g.basement_width(),
                                          static_cast<std::size_t>(letter)));
      int const gw     = static_cast<int>(g.basement_width());
      int       chosen = 0;
      for (int c = 1; c <= gw; ++c) {
        if (g.height(c) == h - 1 && g.at({c, h - 1}) >= letter) {
          chosen = c;
          break;
        }
      }
      if (chosen == 0) {
        throw std::logic_error("phi: no column of height " + std::to_string(h - 1)
                               + " accepts " + std::to_string(letter));
      }
      g.push(chosen, letter);
    }
    // a common basement keeps the transpose symmetry exact
    std::size_t const width = std::max(f.basement_width(), g.basement_width());
    return {f.widened(width), g.widened(width)};
  }

  FillingPair phi(NatMatrix const& a) {
    return phi(matrix_to_array(a));
  }

  TwoLineArray phi_inverse_array(Filling const& f, Filling const& g) {
    if (!is_ssaf(f) || !is_ssaf(g)) {
      throw std::invalid_argument("phi_inverse: both fillings must be SSAFs");
    }
    if (sort_to_partition(f.shape()) != sort_to_partition(g.shape())) {
      throw std::invalid_argument(
          "phi_inverse: shapes " + to_string(f.shape()) + " and "
          + to_string(g.shape()) + " do not rearrange the same partition");
    }
    TwoLineArray w;
    Filling      fc = f;
    Filling      gc = g;
    while (gc.size() > 0) {
      // highest occurrence of the smallest entry: first in reading order
      Cell best{0, 0};
      int  best_value = 0;
      for (Cell c : reading_cells(gc)) {
        if (c.is_basement()) {
          continue;
        }
        int const v = gc.at(c);
        if (best_value == 0 || v < best_value) {
          best       = c;
          best_value = v;
        }
      }
      if (best.row != gc.height(best.column)) {
        throw std::logic_error("phi_inverse: smallest entry is not a column top");
      }
      gc.pop(best.column);
      int const r      = best.row;
      int       column = 0;
      for (int c = static_cast<int>(fc.basement_width()); c >= 1; --c) {
        if (fc.height(c) == r) {
          column = c;
          break;
        }
      }
      if (column == 0) {
        throw std::logic_error("phi_inverse: no column of height "
                               + std::to_string(r) + " in F");
      }
      auto d = detail::delete_unchecked(fc, column);
      fc     = std::move(d.filling);
      w.top.push_back(best_value);
      w.bottom.push_back(d.letter);
    }
    return w;
  }

  NatMatrix phi_inverse(Filling const& f, Filling const& g) {
    return array_to_matrix(phi_inverse_array(f, g));
  }

  ////////////////////////////////////////////////////////////////////////
  // skyline
  ////////////////////////////////////////////////////////////////////////

  Filling skyline(Filling const& f) {
    if (!is_ssaf(f)) {
      throw std::invalid_argument("skyline: filling is not an SSAF");
    }
    std::size_t const n = f.size();
    Word const        s = standardize_word(reading_word(f));
    // relabel in place, in reading order
    std::vector<std::vector<int>> relabelled = f.columns();
    std::size_t                   pos        = 0;
    int const                     w = static_cast<int>(f.basement_width());
    for (int row = f.max_height(); row >= 1; --row) {
      for (int col = 1; col <= w; ++col) {
        if (row <= f.height(col)) {
          relabelled[static_cast<std::size_t>(col - 1)]
                    [static_cast<std::size_t>(row - 1)]
              = s[pos++];
        }
      }
    }
    std::size_t const width = std::max(n, f.basement_width());
    std::vector<std::vector<int>> moved(width);
    for (auto& col : relabelled) {
      if (col.empty()) {
        continue;
      }
      auto const target = static_cast<std::size_t>(col.front() - 1);
      if (!moved[target].empty()) {
        throw std::logic_error("skyline: two columns relocate to column "
                               + std::to_string(target + 1));
      }
      moved[target] = std::move(col);
    }
    return Filling(width, std::move(moved));
  }

}  // namespace skyline
