// The row-set bijection between SSAFs and reverse SSYT, and the insertion
// k -> F with its inverse deletion.

#ifndef SKYLINE_INSERTION_HPP_
#define SKYLINE_INSERTION_HPP_

#include <vector>  // for vector

#include "filling.hpp"
#include "tableau.hpp"

namespace skyline {

  //! What an insertion touched.  `sequence[i]` is the letter placed into
  //! `path[i]`; the last path cell is the newly created cell.
  struct InsertionTrace {
    std::vector<int>  sequence;
    std::vector<Cell> path;
    Cell              termination;

    friend bool operator==(InsertionTrace const&, InsertionTrace const&) = default;
  };

  struct InsertionResult {
    Filling        filling;
    InsertionTrace trace;
  };

  struct DeletionResult {
    Filling filling;
    int     letter;
  };

  //! Row i of the result lists the entries of row i of `f` in decreasing
  //! order.  Throws `std::invalid_argument` unless `f` is an SSAF.
  ReverseSsyt rho(Filling const& f);

  //! The unique SSAF whose row sets are the rows of `p`.  Rows are placed
  //! bottom to top, each largest entry first, on the leftmost column whose
  //! top sits in the row below and is at least the entry.  The basement
  //! width of the result is the largest entry of `p`.
  Filling rho_inverse(ReverseSsyt const& p);

  //! k -> F.  The basement is widened to `k` first if needed.  Throws
  //! `std::invalid_argument` if `k < 1` or `f` is not an SSAF.
  InsertionResult insert(Filling const& f, int k);

  //! Removes the top cell of `column` and undoes the bumps that would have
  //! led there, scanning backwards in reading order.  Exact inverse of
  //! `insert` when `column` is the termination column.  Throws
  //! `std::invalid_argument` if the column is empty or `f` is not an SSAF.
  DeletionResult delete_from_column(Filling const& f, int column);

  namespace detail {
    // Same as the public versions without the SSAF precondition check; for
    // callers that produce SSAFs by construction.
    InsertionResult insert_unchecked(Filling const& f, int k);
    DeletionResult  delete_unchecked(Filling const& f, int column);
  }  // namespace detail

}  // namespace skyline

#endif  // SKYLINE_INSERTION_HPP_
