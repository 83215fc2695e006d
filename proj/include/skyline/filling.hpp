// Augmented fillings of column diagrams and their statistics.
//
// Cells are addressed as (column, row) with 1-based columns.  Row 0 is the
// basement: the basement cell of column i always holds the entry i.  Columns
// are stored bottom to top, without the basement.

#ifndef SKYLINE_FILLING_HPP_
#define SKYLINE_FILLING_HPP_

#include <array>    // for array
#include <compare>  // for operator<=>
#include <cstddef>  // for size_t
#include <set>      // for multiset
#include <utility>  // for pair
#include <vector>   // for vector

#include "composition.hpp"

namespace skyline {

  struct Cell {
    int column = 0;  // 1-based
    int row    = 0;  // 0 is the basement

    bool is_basement() const noexcept {
      return row == 0;
    }
    Cell above() const noexcept {
      return {column, row + 1};
    }
    Cell below() const noexcept {
      return {column, row - 1};
    }

    friend bool operator==(Cell const&, Cell const&) = default;
    friend auto operator<=>(Cell const&, Cell const&) = default;
  };

  //! Entries of an augmented diagram.
  //!
  //! Every stored entry lies in [1, basement_width()].  A filling need not be
  //! an SSAF; use `is_ssaf` to test that.  Equality ignores the basement width
  //! and compares columns with trailing empty columns removed, since extra
  //! empty columns on the right are unobservable.
  class Filling {
   public:
    Filling() = default;

    //! `columns[i]` holds column i+1 bottom to top.  `columns.size()` may be
    //! smaller than `basement_width`; missing columns are empty.  Throws
    //! `std::invalid_argument` on entries outside [1, basement_width] or when
    //! there are more columns than the basement supports.
    Filling(std::size_t basement_width, std::vector<std::vector<int>> columns);

    //! The empty filling with a basement of the given width.
    static Filling empty(std::size_t basement_width);

    std::size_t basement_width() const noexcept {
      return _width;
    }

    int height(int column) const noexcept {
      return (column >= 1 && static_cast<std::size_t>(column) <= _columns.size())
                 ? static_cast<int>(_columns[column - 1].size())
                 : 0;
    }

    int max_height() const noexcept;

    //! Number of non-basement cells.
    std::size_t size() const noexcept;

    //! Column heights, of width `basement_width()`.
    Composition shape() const;

    //! Entry of `c`; the column index for basement cells and 0 for cells
    //! outside the diagram.
    int at(Cell c) const noexcept {
      if (c.row == 0) {
        return (c.column >= 1 && static_cast<std::size_t>(c.column) <= _width)
                   ? c.column
                   : 0;
      }
      if (c.row < 0 || c.row > height(c.column)) {
        return 0;
      }
      return _columns[c.column - 1][c.row - 1];
    }

    bool contains(Cell c) const noexcept {
      return c.column >= 1 && static_cast<std::size_t>(c.column) <= _width
             && c.row >= 0 && c.row <= height(c.column);
    }

    std::vector<int> const& column(int c) const {
      return _columns.at(static_cast<std::size_t>(c - 1));
    }

    std::vector<std::vector<int>> const& columns() const noexcept {
      return _columns;
    }

    //! Copy with the basement extended to `width` (never shrinks).
    Filling widened(std::size_t width) const;

    //! Overwrites the entry of an existing non-basement cell.
    void set(Cell c, int value);

    //! Adds a cell on top of `column`.
    void push(int column, int value);

    //! Removes and returns the top entry of `column`.
    int pop(int column);

    friend bool operator==(Filling const& lhs, Filling const& rhs);

   private:
    void check_value(int value) const;

    std::size_t                   _width = 0;
    std::vector<std::vector<int>> _columns;  // size() == _width
  };

  //! Filling whose column i is constant i, of shape `gamma`.
  Filling constant_filling(Composition const& gamma);

  //! Every cell of the augmented diagram, basement included, top row first
  //! and left to right within a row.
  std::vector<Cell> reading_cells(Filling const& f);

  //! Non-basement entries in reading order.
  std::vector<int> reading_word(Filling const& f);

  //! Multiset of non-basement entries.
  std::multiset<int> content(Filling const& f);

  //! Exponent vector of x^F in `vars` variables; entries above `vars` throw.
  std::vector<int> weight(Filling const& f, std::size_t vars);

  //! True iff the cells attack: same row, or adjacent rows with the higher
  //! cell strictly to the right.
  bool attacking(Cell a, Cell b) noexcept;

  //! All attacking pairs (a, b) with a before b in reading order.
  std::vector<std::pair<Cell, Cell>> attacking_pairs(Filling const& f);

  bool is_non_attacking(Filling const& f);

  //! Non-basement cells whose entry exceeds the entry directly below.
  std::vector<Cell> descent_set(Filling const& f);

  //! Number of non-basement cells strictly above `u` in its column.
  int leg(Filling const& f, Cell u);

  int maj(Filling const& f);

  //! I(x, y) = 1 if x > y else 0.
  constexpr int inversion_indicator(int x, int y) noexcept {
    return x > y ? 1 : 0;
  }

  enum class TripleKind { type_a, type_b };

  //! A type A triple has a1 = (i, j), a2 = (i', j), a3 = (i, j-1) with i < i'
  //! and column i weakly taller than column i'.  A type B triple has
  //! a1 = (i, j), a2 = (i', j), a3 = (i', j+1) with i < i' and column i'
  //! strictly taller.  Heights are those of the non-augmented diagram; the
  //! cells themselves may lie in the basement.
  struct TripleRecord {
    TripleKind          kind;
    std::array<Cell, 3> cells;
    bool                inverted;
  };

  //! Inversion test on the entries (F(a1), F(a2), F(a3)).
  constexpr bool is_inversion_triple(TripleKind kind,
                                     int        e1,
                                     int        e2,
                                     int        e3) noexcept {
    if (kind == TripleKind::type_a) {
      return inversion_indicator(e1, e2) + inversion_indicator(e2, e3)
                 - inversion_indicator(e1, e3)
             == 1;
    }
    return inversion_indicator(e3, e1) + inversion_indicator(e1, e2)
               - inversion_indicator(e3, e2)
           == 1;
  }

  std::vector<TripleRecord> triples(Filling const& f);

  std::size_t inv(Filling const& f);
  std::size_t coinv(Filling const& f);

  //! No descents and every triple an inversion triple.
  bool is_ssaf(Filling const& f);

}  // namespace skyline

#endif  // SKYLINE_FILLING_HPP_
