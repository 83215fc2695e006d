// Exhaustive generation of SSAFs and SSYT, and the polynomials they define.

#ifndef SKYLINE_ENUMERATE_HPP_
#define SKYLINE_ENUMERATE_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "composition.hpp"
#include "filling.hpp"
#include "polynomial.hpp"
#include "tableau.hpp"

namespace skyline {

  //! Every SSAF of shape `gamma` with basement width `width(gamma)`, sorted
  //! by reading word.
  std::vector<Filling> enumerate_ssaf(Composition const& gamma);

  //! Every SSYT of shape `lambda` with entries in [1, n], in lexicographic
  //! order of rows (bottom row first).  Throws if `n < 0`.
  std::vector<Ssyt> enumerate_ssyt(Partition const& lambda, int n);

  //! x^T as an exponent vector of length `vars`.
  std::vector<int> weight(Ssyt const& t, std::size_t vars);

  //! Sum of x^F over SSAF(gamma), in `width(gamma)` variables.
  SparsePolynomial e_hat(Composition const& gamma);

  //! Sum of x^T over SSYT(lambda) with entries at most n.
  SparsePolynomial schur(Partition const& lambda, int n);

  //! Number of SSAFs of shape `gamma` and content `mu`.  Throws
  //! `std::invalid_argument` unless the widths agree.
  BigInt nk(Composition const& gamma, Composition const& mu);

  //! Number of SSYT of shape `lambda` and content `mu`.
  BigInt kostka(Partition const& lambda, Composition const& mu);

  //! NK over all compositions of a fixed sum into a fixed number of parts.
  //! Rows and columns share `index`, sorted by decreasing tail-sum vector,
  //! which extends the reverse dominance order from the top down.
  struct TransitionMatrix {
    std::vector<Composition>         index;
    std::vector<std::vector<BigInt>> values;  // values[row][col]

    bool is_upper_unitriangular() const;
  };

  TransitionMatrix transition_matrix(int n, std::size_t m);

  //! Exact equality of schur(lambda, n) with the sum of e_hat over every
  //! rearrangement of `lambda` into n parts.  When `lambda` has more than n
  //! parts both sides are zero.
  bool verify_schur_decomposition(Partition const& lambda, int n);

}  // namespace skyline

#endif  // SKYLINE_ENUMERATE_HPP_
