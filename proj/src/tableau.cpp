#include "skyline/tableau.hpp"

#include <algorithm>  // for max, sort
#include <deque>      // for deque
#include <numeric>    // for iota
#include <stdexcept>  // for invalid_argument
#include <string>     // for string

namespace skyline {

  namespace {
    // Empty string when valid, otherwise the violated condition.
    template <TableauOrder Order>
    std::string violation(std::vector<std::vector<int>> const& rows) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) {
          return "row " + std::to_string(r + 1) + " is empty";
        }
        if (r > 0 && rows[r].size() > rows[r - 1].size()) {
          return "row lengths are not weakly decreasing upward";
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          int const v = rows[r][c];
          if (v < 1) {
            return "entries must be positive";
          }
          if (c > 0) {
            int const left = rows[r][c - 1];
            if (Order == TableauOrder::semistandard ? left > v : left <= v) {
              return Order == TableauOrder::semistandard
                         ? "rows must be weakly increasing"
                         : "rows must be strictly decreasing";
            }
          }
          if (r > 0) {
            int const below = rows[r - 1][c];
            if (Order == TableauOrder::semistandard ? below >= v : below < v) {
              return Order == TableauOrder::semistandard
                         ? "columns must be strictly increasing"
                         : "columns must be weakly decreasing";
            }
          }
        }
      }
      return {};
    }

    std::vector<Word> columns_of(std::vector<std::vector<int>> const& rows) {
      std::vector<Word> cols;
      if (rows.empty()) {
        return cols;
      }
      cols.resize(rows[0].size());
      for (auto const& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          cols[c].push_back(row[c]);
        }
      }
      return cols;  // bottom to top
    }

    std::vector<std::vector<int>> rows_of(std::vector<Word> const& cols) {
      std::vector<std::vector<int>> rows;
      for (auto const& col : cols) {
        if (col.size() > rows.size()) {
          rows.resize(col.size());
        }
        for (std::size_t r = 0; r < col.size(); ++r) {
          rows[r].push_back(col[r]);
        }
      }
      return rows;
    }
  }  // namespace

  template <TableauOrder Order>
  Tableau<Order>::Tableau(std::vector<std::vector<int>> rows)
      : _rows(std::move(rows)) {
    if (auto why = violation<Order>(_rows); !why.empty()) {
      throw std::invalid_argument(
          std::string(Order == TableauOrder::semistandard ? "invalid SSYT: "
                                                          : "invalid reverse SSYT: ")
          + why);
    }
  }

  template <TableauOrder Order>
  std::size_t Tableau<Order>::size() const noexcept {
    std::size_t n = 0;
    for (auto const& row : _rows) {
      n += row.size();
    }
    return n;
  }

  template <TableauOrder Order>
  Partition Tableau<Order>::shape() const {
    std::vector<int> p;
    p.reserve(_rows.size());
    for (auto const& row : _rows) {
      p.push_back(static_cast<int>(row.size()));
    }
    return Partition(std::move(p));
  }

  template class Tableau<TableauOrder::semistandard>;
  template class Tableau<TableauOrder::reverse>;

  bool is_semistandard(std::vector<std::vector<int>> const& rows) {
    return violation<TableauOrder::semistandard>(rows).empty();
  }

  bool is_reverse_semistandard(std::vector<std::vector<int>> const& rows) {
    return violation<TableauOrder::reverse>(rows).empty();
  }

  Word col_word(Ssyt const& t) {
    Word w;
    w.reserve(t.size());
    for (auto const& col : columns_of(t.rows())) {
      w.insert(w.end(), col.rbegin(), col.rend());
    }
    return w;
  }

  Ssyt ssyt_from_columns(std::vector<Word> const& columns) {
    std::vector<Word> bottom_up;
    bottom_up.reserve(columns.size());
    for (auto const& col : columns) {
      bottom_up.emplace_back(col.rbegin(), col.rend());
    }
    return Ssyt(rows_of(bottom_up));
  }

  std::vector<Word> column_decompose(Word const& w) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i == 0 || w[i] >= w[i - 1]) {
        out.emplace_back();
      }
      out.back().push_back(w[i]);
    }
    return out;
  }

  ReverseInsertion reverse_schensted_insert(ReverseSsyt const& p, int k) {
    if (k < 1) {
      throw std::invalid_argument("reverse_schensted_insert: letter must be positive");
    }
    auto        cols = columns_of(p.rows());
    int         x    = k;
    std::size_t c    = 0;
    int         row  = 0;
    while (true) {
      if (c == cols.size()) {
        cols.push_back({x});
        row = 1;
        break;
      }
      auto& col = cols[c];
      auto  it  = std::find_if(col.begin(), col.end(), [x](int v) { return v < x; });
      if (it == col.end()) {
        col.push_back(x);
        row = static_cast<int>(col.size());
        break;
      }
      std::swap(*it, x);
      ++c;
    }
    return {ReverseSsyt(rows_of(cols)), row};
  }

  Word standardize_word(Word const& w) {
    std::vector<std::size_t> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&w](std::size_t a, std::size_t b) {
      return w[a] < w[b];
    });
    Word out(w.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
      out[idx[r]] = static_cast<int>(r + 1);
    }
    return out;
  }

  Ssyt standardize_ssyt(Ssyt const& t) {
    auto cols = columns_of(t.rows());
    // column word order is columns left to right, each top to bottom
    Word w;
    for (auto const& col : cols) {
      w.insert(w.end(), col.rbegin(), col.rend());
    }
    Word const  s   = standardize_word(w);
    std::size_t pos = 0;
    for (auto& col : cols) {
      for (auto it = col.rbegin(); it != col.rend(); ++it) {
        *it = s[pos++];
      }
    }
    return Ssyt(rows_of(cols));
  }

  std::vector<Word> knuth_neighbours(Word const& w) {
    std::vector<Word> out;
    for (std::size_t p = 0; p + 2 < w.size(); ++p) {
      int const a = w[p], b = w[p + 1], c = w[p + 2];
      // xzy <-> zxy with x <= y < z swaps the first two letters
      if ((a <= c && c < b) || (b <= c && c < a)) {
        Word v = w;
        std::swap(v[p], v[p + 1]);
        out.push_back(std::move(v));
      }
      // yxz <-> yzx with x < y <= z swaps the last two letters
      if ((b < a && a <= c) || (c < a && a <= b)) {
        Word v = w;
        std::swap(v[p + 1], v[p + 2]);
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  KnuthClass knuth_class(Word const& w, std::size_t cap) {
    KnuthClass       result;
    std::deque<Word> frontier;
    result.words.insert(w);
    frontier.push_back(w);
    while (!frontier.empty() && !result.truncated) {
      Word const cur = frontier.front();
      frontier.pop_front();
      for (auto& v : knuth_neighbours(cur)) {
        if (result.words.count(v) != 0) {
          continue;
        }
        if (result.words.size() >= cap) {
          result.truncated = true;
          break;
        }
        result.words.insert(v);
        frontier.push_back(std::move(v));
      }
    }
    return result;
  }

}  // namespace skyline
