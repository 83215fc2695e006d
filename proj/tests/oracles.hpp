// Independent reference implementations used only by the tests.  They work
// on plain vectors and never call the library's algorithms, so agreement
// with the library is evidence rather than tautology.

#ifndef SKYLINE_TESTS_ORACLES_HPP_
#define SKYLINE_TESTS_ORACLES_HPP_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

  // rows bottom first
  using Rows = std::vector<std::vector<int>>;
  // columns bottom to top, column i+1 at index i
  using Cols = std::vector<std::vector<int>>;
  using Word = std::vector<int>;
  using Monomials = std::map<std::vector<int>, long long>;

  // Every SSYT of shape `lambda` over [1, n] by filtering all assignments.
  std::vector<Rows> ssyt(std::vector<int> const& lambda, int n);

  // SSAF test written from the definitions: descents against the cell
  // below (basement = column index) plus the full triple condition.
  bool is_ssaf(Cols const& cols, int width);

  // Number of inversion and non-inversion triples, from the definitions.
  std::pair<std::size_t, std::size_t> inv_coinv(Cols const& cols, int width);

  // Every SSAF of shape `gamma` by filtering all width^|gamma| assignments.
  std::vector<Cols> ssaf(std::vector<int> const& gamma);

  // x^T summed over tableaux in `vars` variables.
  Monomials schur(std::vector<int> const& lambda, int vars);

  // Classical RSK row insertion of a word: the insertion tableau, rows
  // bottom first.
  Rows row_insertion(Word const& w);

  // Reverse RSK on a biword processed right to left: bottom letters are
  // column inserted into a reverse tableau (the lowest entry strictly
  // smaller is displaced) and top letters record the new cells.
  std::pair<Rows, Rows> reverse_rsk(Word const& top, Word const& bottom);

  // Knuth class of `w` by brute force over all words with the same letters,
  // grouped by classical insertion tableau.
  std::size_t knuth_class_size(Word const& w);

}  // namespace oracle

#endif  // SKYLINE_TESTS_ORACLES_HPP_
