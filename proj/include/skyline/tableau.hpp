// Young tableaux in French orientation (bottom row first), words, and the
// word operations used by the bijections.

#ifndef SKYLINE_TABLEAU_HPP_
#define SKYLINE_TABLEAU_HPP_

#include <cstddef>  // for size_t
#include <set>      // for set
#include <vector>   // for vector

#include "composition.hpp"

namespace skyline {

  using Word = std::vector<int>;

  enum class TableauOrder {
    //! rows weakly increasing, columns strictly increasing
    semistandard,
    //! rows strictly decreasing, columns weakly decreasing
    reverse
  };

  //! A tableau of partition shape.  Row 0 is the bottom row; rows are read
  //! left to right and columns bottom to top.  The constructor validates the
  //! ordering for `Order` and throws `std::invalid_argument` naming the
  //! violated condition.
  template <TableauOrder Order>
  class Tableau {
   public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    std::vector<std::vector<int>> const& rows() const noexcept {
      return _rows;
    }

    std::size_t num_rows() const noexcept {
      return _rows.size();
    }

    std::size_t size() const noexcept;

    bool empty() const noexcept {
      return _rows.empty();
    }

    //! Row lengths.
    Partition shape() const;

    //! Column lengths, i.e. the conjugate of `shape()`.
    Partition column_lengths() const {
      return conjugate(shape());
    }

    //! Entry at zero-based (row, column).
    int at(std::size_t row, std::size_t column) const {
      return _rows.at(row).at(column);
    }

    friend bool operator==(Tableau const&, Tableau const&) = default;
    friend auto operator<=>(Tableau const&, Tableau const&) = default;

   private:
    std::vector<std::vector<int>> _rows;
  };

  using Ssyt        = Tableau<TableauOrder::semistandard>;
  using ReverseSsyt = Tableau<TableauOrder::reverse>;

  extern template class Tableau<TableauOrder::semistandard>;
  extern template class Tableau<TableauOrder::reverse>;

  //! Validation without throwing.
  bool is_semistandard(std::vector<std::vector<int>> const& rows);
  bool is_reverse_semistandard(std::vector<std::vector<int>> const& rows);

  //! Column word: columns left to right, each read top to bottom.
  Word col_word(Ssyt const& t);

  //! Builds the tableau whose columns, each listed top to bottom, are
  //! `columns`.
  Ssyt ssyt_from_columns(std::vector<Word> const& columns);

  //! Greedy split into maximal strictly decreasing runs.
  std::vector<Word> column_decompose(Word const& w);

  struct ReverseInsertion {
    ReverseSsyt tableau;
    //! 1-based row of the new cell.
    int row;
  };

  //! Reverse Schensted (column) insertion: k enters the first column and
  //! displaces the lowest entry strictly smaller than it; the displaced entry
  //! moves on to the next column.  When nothing is smaller the letter is
  //! placed on top of the column.
  ReverseInsertion reverse_schensted_insert(ReverseSsyt const& p, int k);

  //! Relabels onto {1..n} preserving order; equal letters are numbered left
  //! to right.
  Word standardize_word(Word const& w);

  //! Standardization of a tableau, breaking ties by position in the
  //! column word.  The result is a standard Young tableau of the same shape.
  Ssyt standardize_ssyt(Ssyt const& t);

  struct KnuthClass {
    std::set<Word> words;
    bool           truncated = false;
  };

  //! Words reachable from `w` by elementary Knuth moves
  //! xzy <-> zxy (x <= y < z) and yxz <-> yzx (x < y <= z), breadth first.
  //! Stops once `cap` words are known and sets `truncated` if unexplored
  //! words remain.
  KnuthClass knuth_class(Word const& w, std::size_t cap);

  //! Words one elementary Knuth move away from `w`.
  std::vector<Word> knuth_neighbours(Word const& w);

}  // namespace skyline

#endif  // SKYLINE_TABLEAU_HPP_
