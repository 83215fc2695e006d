// Exhaustive verification suites for the identities and bijections.
//
// Every suite sweeps a finite family of independent instances.  The
// parallel path distributes instances over OpenMP threads; the serial path
// is a plain loop kept as the reference.  Both report the first failing
// instance in sweep order, so their reports are identical.

#ifndef SKYLINE_VERIFY_HPP_
#define SKYLINE_VERIFY_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "bijection.hpp"
#include "composition.hpp"
#include "filling.hpp"

namespace skyline {

  enum class Execution { serial, parallel };

  struct SuiteReport {
    std::string suite;
    bool        ok = true;
    //! Number of instances examined.
    std::size_t checked = 0;
    //! Empty when `ok`.
    std::string counterexample;

    friend bool operator==(SuiteReport const&, SuiteReport const&) = default;
  };

  //! Schur decomposition for every partition of size at most `max_n`, with
  //! as many variables as cells.
  SuiteReport verify_schur(int max_n, Execution ex = Execution::parallel);

  //! Round trip and transpose symmetry of phi for every N-matrix with entry
  //! total at most `total` and indices at most `index`.
  SuiteReport verify_rsk_roundtrip(int       total,
                                   int       index,
                                   Execution ex = Execution::parallel);

  //! Unit upper triangularity of transition_matrix(n, m) for n <= sum and
  //! 1 <= m <= width.
  SuiteReport verify_triangularity(int       sum,
                                   int       width,
                                   Execution ex = Execution::parallel);

  //! skyline(psi(T)) == psi(standardize(T)) for every SSYT with at most
  //! `max_n` cells and entries at most `entry_bound`.
  SuiteReport verify_standardization(int       max_n,
                                     int       entry_bound,
                                     Execution ex = Execution::parallel);

  //! Knuth-equivalent bottom lines give the same insertion filling, for all
  //! words of length at most `length` over [1, alphabet].
  SuiteReport verify_knuth(int length, int alphabet, Execution ex = Execution::parallel);

  //! rho(k -> F) == rho(F) <- k, and deletion undoes insertion, for every
  //! SSAF with at most `max_cells` cells, entries and k at most
  //! `entry_bound`.
  SuiteReport verify_insertion(int       max_cells,
                               int       entry_bound,
                               Execution ex = Execution::parallel);

  //! psi on SSYT(lambda, n) for every |lambda| <= max_n: injective,
  //! weight-preserving, shape-rearranging, inverted by psi_inverse and onto
  //! the union of SSAF(gamma) over rearrangements of lambda.
  SuiteReport verify_psi(int max_n, int n, Execution ex = Execution::parallel);

  //! Structural lemmas over every filling of a shape with at most
  //! `max_cells` cells and entries at most `alphabet` (the basement width).
  SuiteReport verify_lemmas(int max_cells, int alphabet, Execution ex = Execution::parallel);

  //! Random supplements: `samples` matrices and words well beyond the
  //! exhaustive bounds, drawn from a generator seeded by `seed`.
  SuiteReport verify_random(std::uint64_t seed,
                            std::size_t   samples,
                            Execution     ex = Execution::parallel);

  //! Bounds accepted by `run_suite`; unset fields take the suite defaults.
  struct SuiteBounds {
    std::optional<int>           max_n;
    std::optional<int>           sum;
    std::optional<int>           width;
    std::optional<int>           total;
    std::optional<int>           index;
    std::optional<std::uint64_t> seed;
  };

  //! Names accepted by `run_suite`.
  std::vector<std::string> suite_names();

  //! Dispatches on `name`; throws `std::invalid_argument` on an unknown
  //! suite or a bound outside the desk-scale limits.
  SuiteReport run_suite(std::string_view   name,
                        SuiteBounds const& bounds,
                        Execution          ex = Execution::parallel);

  //! Every N-matrix with entry total at most `total` supported on
  //! [1, index] x [1, index], ordered by total then entries.
  std::vector<NatMatrix> all_matrices(int total, int index);

  //! Every SSAF with at most `max_cells` cells and entries at most
  //! `entry_bound`, all with basement width `entry_bound`.
  std::vector<Filling> all_ssaf(int max_cells, int entry_bound);

}  // namespace skyline

#endif  // SKYLINE_VERIFY_HPP_
