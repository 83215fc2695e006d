#include "skyline/filling.hpp"

#include <algorithm>  // for max
#include <stdexcept>  // for invalid_argument, out_of_range
#include <string>     // for to_string

namespace skyline {

  Filling::Filling(std::size_t basement_width,
                   std::vector<std::vector<int>> columns)
      : _width(basement_width), _columns(std::move(columns)) {
    if (_columns.size() > _width) {
      throw std::invalid_argument(
          "filling has " + std::to_string(_columns.size())
          + " columns but basement width " + std::to_string(_width));
    }
    _columns.resize(_width);
    for (auto const& col : _columns) {
      for (int v : col) {
        check_value(v);
      }
    }
  }

  Filling Filling::empty(std::size_t basement_width) {
    return Filling(basement_width, {});
  }

  void Filling::check_value(int value) const {
    if (value < 1 || static_cast<std::size_t>(value) > _width) {
      throw std::invalid_argument("filling entry " + std::to_string(value)
                                  + " outside [1, basement_width="
                                  + std::to_string(_width) + "]");
    }
  }

  int Filling::max_height() const noexcept {
    std::size_t h = 0;
    for (auto const& col : _columns) {
      h = std::max(h, col.size());
    }
    return static_cast<int>(h);
  }

  std::size_t Filling::size() const noexcept {
    std::size_t n = 0;
    for (auto const& col : _columns) {
      n += col.size();
    }
    return n;
  }

  Composition Filling::shape() const {
    std::vector<int> p;
    p.reserve(_width);
    for (auto const& col : _columns) {
      p.push_back(static_cast<int>(col.size()));
    }
    return Composition(std::move(p));
  }

  Filling Filling::widened(std::size_t width) const {
    Filling f = *this;
    if (width > f._width) {
      f._width = width;
      f._columns.resize(width);
    }
    return f;
  }

  void Filling::set(Cell c, int value) {
    if (c.row < 1 || c.row > height(c.column)) {
      throw std::out_of_range("Filling::set: no non-basement cell at ("
                              + std::to_string(c.column) + ","
                              + std::to_string(c.row) + ")");
    }
    check_value(value);
    _columns[c.column - 1][c.row - 1] = value;
  }

  void Filling::push(int column, int value) {
    if (column < 1 || static_cast<std::size_t>(column) > _width) {
      throw std::out_of_range("Filling::push: column " + std::to_string(column)
                              + " outside the basement");
    }
    check_value(value);
    _columns[column - 1].push_back(value);
  }

  int Filling::pop(int column) {
    if (height(column) == 0) {
      throw std::out_of_range("Filling::pop: column " + std::to_string(column)
                              + " is empty");
    }
    int v = _columns[column - 1].back();
    _columns[column - 1].pop_back();
    return v;
  }

  bool operator==(Filling const& lhs, Filling const& rhs) {
    std::size_t const w = std::max(lhs._columns.size(), rhs._columns.size());
    static std::vector<int> const none;
    for (std::size_t i = 0; i < w; ++i) {
      auto const& a = i < lhs._columns.size() ? lhs._columns[i] : none;
      auto const& b = i < rhs._columns.size() ? rhs._columns[i] : none;
      if (a != b) {
        return false;
      }
    }
    return true;
  }

  Filling constant_filling(Composition const& gamma) {
    std::vector<std::vector<int>> cols(gamma.width());
    for (std::size_t i = 0; i < gamma.width(); ++i) {
      cols[i].assign(static_cast<std::size_t>(gamma[i]), static_cast<int>(i + 1));
    }
    return Filling(gamma.width(), std::move(cols));
  }

  ////////////////////////////////////////////////////////////////////////
  // Reading order
  ////////////////////////////////////////////////////////////////////////

  std::vector<Cell> reading_cells(Filling const& f) {
    std::vector<Cell> cells;
    cells.reserve(f.size() + f.basement_width());
    int const w = static_cast<int>(f.basement_width());
    for (int row = f.max_height(); row >= 0; --row) {
      for (int col = 1; col <= w; ++col) {
        if (row <= f.height(col)) {
          cells.push_back({col, row});
        }
      }
    }
    return cells;
  }

  std::vector<int> reading_word(Filling const& f) {
    std::vector<int> word;
    word.reserve(f.size());
    int const w = static_cast<int>(f.basement_width());
    for (int row = f.max_height(); row >= 1; --row) {
      for (int col = 1; col <= w; ++col) {
        if (row <= f.height(col)) {
          word.push_back(f.at({col, row}));
        }
      }
    }
    return word;
  }

  std::multiset<int> content(Filling const& f) {
    std::multiset<int> out;
    for (auto const& col : f.columns()) {
      out.insert(col.begin(), col.end());
    }
    return out;
  }

  std::vector<int> weight(Filling const& f, std::size_t vars) {
    std::vector<int> e(vars, 0);
    for (auto const& col : f.columns()) {
      for (int v : col) {
        if (static_cast<std::size_t>(v) > vars) {
          throw std::invalid_argument("weight: entry " + std::to_string(v)
                                      + " exceeds variable count "
                                      + std::to_string(vars));
        }
        ++e[static_cast<std::size_t>(v - 1)];
      }
    }
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Attacking pairs
  ////////////////////////////////////////////////////////////////////////

  bool attacking(Cell a, Cell b) noexcept {
    if (a == b) {
      return false;
    }
    if (a.row == b.row) {
      return true;
    }
    if (b.row - a.row == 1) {
      return a.column < b.column;
    }
    if (a.row - b.row == 1) {
      return b.column < a.column;
    }
    return false;
  }

  std::vector<std::pair<Cell, Cell>> attacking_pairs(Filling const& f) {
    auto const                         cells = reading_cells(f);
    std::vector<std::pair<Cell, Cell>> out;
    for (std::size_t x = 0; x < cells.size(); ++x) {
      for (std::size_t y = x + 1; y < cells.size(); ++y) {
        // reading order descends by row, so rows more than one apart end
        // the scan for this x
        if (cells[x].row - cells[y].row > 1) {
          break;
        }
        if (attacking(cells[x], cells[y])) {
          out.emplace_back(cells[x], cells[y]);
        }
      }
    }
    return out;
  }

  bool is_non_attacking(Filling const& f) {
    for (auto const& [a, b] : attacking_pairs(f)) {
      if (f.at(a) == f.at(b)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Descents and maj
  ////////////////////////////////////////////////////////////////////////

  std::vector<Cell> descent_set(Filling const& f) {
    std::vector<Cell> out;
    int const         w = static_cast<int>(f.basement_width());
    for (int col = 1; col <= w; ++col) {
      for (int row = 1; row <= f.height(col); ++row) {
        Cell const u{col, row};
        if (f.at(u) > f.at(u.below())) {
          out.push_back(u);
        }
      }
    }
    return out;
  }

  int leg(Filling const& f, Cell u) {
    if (!f.contains(u)) {
      throw std::invalid_argument("leg: cell outside the diagram");
    }
    return f.height(u.column) - u.row;
  }

  int maj(Filling const& f) {
    int total = 0;
    for (Cell u : descent_set(f)) {
      total += leg(f, u) + 1;
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Triples
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Visit>
    void for_each_triple(Filling const& f, Visit&& visit) {
      int const w = static_cast<int>(f.basement_width());
      for (int i = 1; i <= w; ++i) {
        int const hi = f.height(i);
        for (int k = i + 1; k <= w; ++k) {
          int const hk = f.height(k);
          if (hi >= hk) {
            for (int j = 1; j <= hk; ++j) {
              visit(TripleKind::type_a,
                    std::array<Cell, 3>{Cell{i, j}, Cell{k, j}, Cell{i, j - 1}});
            }
          } else {
            for (int j = 0; j <= hi; ++j) {
              visit(TripleKind::type_b,
                    std::array<Cell, 3>{Cell{i, j}, Cell{k, j}, Cell{k, j + 1}});
            }
          }
        }
      }
    }
  }  // namespace

  std::vector<TripleRecord> triples(Filling const& f) {
    std::vector<TripleRecord> out;
    for_each_triple(f, [&](TripleKind kind, std::array<Cell, 3> const& c) {
      bool const inverted = is_inversion_triple(
          kind, f.at(c[0]), f.at(c[1]), f.at(c[2]));
      out.push_back({kind, c, inverted});
    });
    return out;
  }

  std::size_t inv(Filling const& f) {
    std::size_t n = 0;
    for_each_triple(f, [&](TripleKind kind, std::array<Cell, 3> const& c) {
      n += is_inversion_triple(kind, f.at(c[0]), f.at(c[1]), f.at(c[2]));
    });
    return n;
  }

  std::size_t coinv(Filling const& f) {
    std::size_t n = 0;
    for_each_triple(f, [&](TripleKind kind, std::array<Cell, 3> const& c) {
      n += !is_inversion_triple(kind, f.at(c[0]), f.at(c[1]), f.at(c[2]));
    });
    return n;
  }

  bool is_ssaf(Filling const& f) {
    int const w = static_cast<int>(f.basement_width());
    for (int col = 1; col <= w; ++col) {
      for (int row = 1; row <= f.height(col); ++row) {
        if (f.at({col, row}) > f.at({col, row - 1})) {
          return false;
        }
      }
    }
    return coinv(f) == 0;
  }

}  // namespace skyline
