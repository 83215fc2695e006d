// The weight-preserving bijection between SSYT and SSAFs, the RSK analogue
// on N-matrices, and skylining (standardization of SSAFs).

#ifndef SKYLINE_BIJECTION_HPP_
#define SKYLINE_BIJECTION_HPP_

#include <map>      // for map
#include <utility>  // for pair
#include <vector>   // for vector

#include "filling.hpp"
#include "tableau.hpp"

namespace skyline {

  //! Matrix of non-negative integers with finite support, indexed from 1.
  //! Only positive counts are stored.
  class NatMatrix {
   public:
    using key_type = std::pair<int, int>;  // (row, column)

    NatMatrix() = default;

    //! Adds `count` to entry (row, column).  Throws on non-positive indices
    //! or negative counts.
    void add(int row, int column, int count = 1);

    int at(int row, int column) const;

    //! Sum of all entries.
    int total() const noexcept;

    std::map<key_type, int> const& entries() const noexcept {
      return _entries;
    }

    NatMatrix transposed() const;

    friend bool operator==(NatMatrix const&, NatMatrix const&) = default;

   private:
    std::map<key_type, int> _entries;
  };

  //! Biword of an N-matrix.  The top line is weakly increasing and equal top
  //! letters carry weakly increasing bottom letters.
  struct TwoLineArray {
    std::vector<int> top;
    std::vector<int> bottom;

    std::size_t size() const noexcept {
      return top.size();
    }

    //! Throws `std::invalid_argument` if the invariants fail.
    void validate() const;

    friend bool operator==(TwoLineArray const&, TwoLineArray const&) = default;
  };

  TwoLineArray matrix_to_array(NatMatrix const& a);
  NatMatrix    array_to_matrix(TwoLineArray const& w);

  //! Inserts col(T) from right to left into the empty SSAF.
  Filling psi(Ssyt const& t);

  //! Inverse of `psi`.  Throws `std::invalid_argument` unless `f` is an SSAF.
  Ssyt psi_inverse(Filling const& f);

  struct FillingPair {
    //! insertion filling F
    Filling insertion;
    //! recording filling G
    Filling recording;

    friend bool operator==(FillingPair const&, FillingPair const&) = default;
  };

  //! The RSK analogue.  Processes the biword right to left: each bottom
  //! letter is inserted into F; the top letter goes onto the leftmost column
  //! of G whose height is one less than the terminating column's new height
  //! and whose top entry (basement included) is at least the letter.
  //! Both fillings get the basement width of the wider one.
  FillingPair phi(TwoLineArray const& w);
  FillingPair phi(NatMatrix const& a);

  //! Inverse of `phi`.  Throws `std::invalid_argument` if either filling is
  //! not an SSAF or their shapes do not rearrange the same partition.
  TwoLineArray phi_inverse_array(Filling const& f, Filling const& g);
  NatMatrix    phi_inverse(Filling const& f, Filling const& g);

  //! Standardization of an SSAF: relabel by the standardized reading word and
  //! move each column onto the basement cell matching its new bottom entry.
  Filling skyline(Filling const& f);

}  // namespace skyline

#endif  // SKYLINE_BIJECTION_HPP_
