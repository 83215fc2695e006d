// Weak compositions, partitions and the reverse dominance order.

#ifndef SKYLINE_COMPOSITION_HPP_
#define SKYLINE_COMPOSITION_HPP_

#include <cstddef>           // for size_t
#include <initializer_list>  // for initializer_list
#include <string>            // for string
#include <string_view>       // for string_view
#include <vector>            // for vector

namespace skyline {

  //! A finite sequence of non-negative integers.
  //!
  //! The width of a composition is its number of parts, trailing zeros
  //! included.  Two compositions compare equal when they agree after padding
  //! the shorter one with zeros, so `(1,0,3)` and `(1,0,3,0)` are equal even
  //! though their widths differ.
  class Composition {
   public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    std::size_t width() const noexcept {
      return _parts.size();
    }

    bool empty() const noexcept {
      return _parts.empty();
    }

    //! Zero-based access.
    int operator[](std::size_t i) const {
      return _parts[i];
    }

    //! One-based access to column `column`; zero beyond the width.
    int part(std::size_t column) const noexcept {
      return (column >= 1 && column <= _parts.size()) ? _parts[column - 1] : 0;
    }

    int sum() const noexcept;

    //! Largest part, 0 for the empty composition.
    int max_part() const noexcept;

    const std::vector<int>& parts() const noexcept {
      return _parts;
    }

    auto begin() const noexcept {
      return _parts.begin();
    }
    auto end() const noexcept {
      return _parts.end();
    }

    //! Copy extended with zeros to `width` parts.  Never shortens.
    Composition padded(std::size_t width) const;

    //! Copy with trailing zeros removed.
    Composition trimmed() const;

    friend bool operator==(Composition const& lhs, Composition const& rhs);

    //! Lexicographic on trimmed parts; consistent with `operator==`.
    friend bool operator<(Composition const& lhs, Composition const& rhs);

   private:
    std::vector<int> _parts;
  };

  //! A weakly decreasing sequence of positive integers.
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    std::size_t length() const noexcept {
      return _parts.size();
    }
    int operator[](std::size_t i) const {
      return _parts[i];
    }
    int sum() const noexcept;
    const std::vector<int>& parts() const noexcept {
      return _parts;
    }
    auto begin() const noexcept {
      return _parts.begin();
    }
    auto end() const noexcept {
      return _parts.end();
    }

    //! The partition viewed as a composition of width `length()`.
    Composition as_composition() const {
      return Composition(_parts);
    }

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const&, Partition const&) = default;

   private:
    std::vector<int> _parts;
  };

  //! Parts of `gamma` sorted weakly decreasing, zeros dropped.
  Partition sort_to_partition(Composition const& gamma);

  //! Transpose of a partition.
  Partition conjugate(Partition const& lambda);

  //! Every width-`width` composition whose sorted nonzero parts equal
  //! `lambda`, in decreasing lexicographic order (so `lambda` padded comes
  //! first).  Throws `std::invalid_argument` if `width < lambda.length()`.
  std::vector<Composition> rearrangements(Partition const& lambda,
                                          std::size_t      width);

  //! All weak compositions of `sum` into exactly `width` parts, in decreasing
  //! lexicographic order.
  std::vector<Composition> compositions(int sum, std::size_t width);

  //! All partitions of `n`, in decreasing lexicographic order.
  std::vector<Partition> partitions(int n);

  //! True iff every tail sum of `mu` is at most the matching tail sum of
  //! `gamma`.  The shorter argument is padded with zeros.  Throws
  //! `std::invalid_argument` when the totals differ.
  bool reverse_dominance_leq(Composition const& mu, Composition const& gamma);

  //! Tail sums `T_k = sum_{i >= k} gamma_i` for k = 1..width.
  std::vector<int> tail_sums(Composition const& gamma);

  //! "(1,0,3,2)"
  std::string to_string(Composition const& gamma);
  std::string to_string(Partition const& lambda);

  //! Parses "1,0,3,2" (surrounding parentheses or brackets allowed).
  Composition parse_composition(std::string_view text);

}  // namespace skyline

#endif  // SKYLINE_COMPOSITION_HPP_
