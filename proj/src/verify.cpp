#include "skyline/verify.hpp"

#include <algorithm>   // for sort, min
#include <exception>   // for exception
#include <functional>  // for function
#include <map>         // for map
#include <random>      // for mt19937_64, uniform_int_distribution
#include <set>         // for set
#include <stdexcept>   // for invalid_argument


#include "skyline/enumerate.hpp"
#include "skyline/insertion.hpp"
#include "skyline/render.hpp"

namespace skyline {

  namespace {

    // Empty on success, otherwise a description of the failure.
    using Check = std::function<std::string(std::size_t)>;

    std::string guarded(Check const& check, std::size_t i) {
      try {
        return check(i);
      } catch (std::exception const& e) {
        return std::string("exception: ") + e.what();
      }
    }

    SuiteReport run(std::string suite, std::size_t n, Execution ex, Check const& check) {
      std::vector<std::string> failures(n);
      if (ex == Execution::parallel) {
        auto const count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < count; ++i) {
          failures[static_cast<std::size_t>(i)]
              = guarded(check, static_cast<std::size_t>(i));
        }
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          failures[i] = guarded(check, i);
        }
      }
      SuiteReport report{std::move(suite), true, n, {}};
      for (auto& why : failures) {
        if (!why.empty()) {
          report.ok             = false;
          report.counterexample = std::move(why);
          break;
        }
      }
      return report;
    }

    std::vector<Partition> partitions_up_to(int max_n) {
      std::vector<Partition> out;
      for (int n = 0; n <= max_n; ++n) {
        auto ps = partitions(n);
        out.insert(out.end(), ps.begin(), ps.end());
      }
      return out;
    }

    std::vector<Composition> shapes_up_to(int max_cells, std::size_t width) {
      std::vector<Composition> out;
      for (int n = 0; n <= max_cells; ++n) {
        auto cs = compositions(n, width);
        out.insert(out.end(), cs.begin(), cs.end());
      }
      return out;
    }

    // Columns with trailing empties removed; a total order for fillings
    // that matches Filling equality.
    std::vector<std::vector<int>> key(Filling const& f) {
      auto cols = f.columns();
      while (!cols.empty() && cols.back().empty()) {
        cols.pop_back();
      }
      return cols;
    }

    std::string matrix_string(NatMatrix const& a) {
      std::string out = "{";
      for (auto const& [k, v] : a.entries()) {
        if (out.size() > 1) {
          out += ",";
        }
        out += "(" + std::to_string(k.first) + "," + std::to_string(k.second)
               + "):" + std::to_string(v);
      }
      return out + "}";
    }

    std::string check_phi(NatMatrix const& a) {
      auto const fg = phi(a);
      if (!is_ssaf(fg.insertion) || !is_ssaf(fg.recording)) {
        return "phi" + matrix_string(a) + " is not a pair of SSAFs";
      }
      if (sort_to_partition(fg.insertion.shape())
          != sort_to_partition(fg.recording.shape())) {
        return "phi" + matrix_string(a) + " has shapes of different partitions";
      }
      if (phi_inverse(fg.insertion, fg.recording) != a) {
        return "phi_inverse(phi(A)) != A for A=" + matrix_string(a);
      }
      auto const t = phi(a.transposed());
      if (!(t.insertion == fg.recording && t.recording == fg.insertion)) {
        return "phi(A^t) is not the swap of phi(A) for A=" + matrix_string(a);
      }
      return {};
    }

    Filling insertion_filling(Word const& w) {
      TwoLineArray arr;
      for (std::size_t i = 0; i < w.size(); ++i) {
        arr.top.push_back(static_cast<int>(i + 1));
      }
      arr.bottom = w;
      return phi(arr).insertion;
    }

    std::vector<Word> words_up_to(int length, int alphabet) {
      std::vector<Word> out{{}};
      std::vector<Word> layer{{}};
      for (int l = 1; l <= length; ++l) {
        std::vector<Word> next;
        for (auto const& w : layer) {
          for (int a = 1; a <= alphabet; ++a) {
            Word v = w;
            v.push_back(a);
            next.push_back(std::move(v));
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
      }
      return out;
    }

    // Every filling of `gamma` with entries in [1, alphabet], basement
    // width `alphabet`.
    template <typename Visit>
    void for_each_filling(Composition const& gamma, int alphabet, Visit&& visit) {
      std::size_t const        w = static_cast<std::size_t>(alphabet);
      std::vector<Cell>        cells;
      for (std::size_t c = 1; c <= gamma.width(); ++c) {
        for (int r = 1; r <= gamma.part(c); ++r) {
          cells.push_back({static_cast<int>(c), r});
        }
      }
      std::vector<std::vector<int>> cols(w);
      for (std::size_t c = 1; c <= gamma.width(); ++c) {
        cols[c - 1].assign(static_cast<std::size_t>(gamma.part(c)), 1);
      }
      Filling f(w, cols);
      while (true) {
        visit(f);
        std::size_t i = 0;
        for (; i < cells.size(); ++i) {
          int const v = f.at(cells[i]);
          if (v < alphabet) {
            f.set(cells[i], v + 1);
            break;
          }
          f.set(cells[i], 1);
        }
        if (i == cells.size()) {
          return;
        }
      }
    }

    // Empty when every lemma holds for `f`.
    std::string check_lemmas(Filling const& f) {
      bool const descentless = descent_set(f).empty();
      bool const ssaf        = descentless && coinv(f) == 0;
      if (!ssaf) {
        return {};
      }
      std::string const where = " in " + to_string(f);
      for (auto const& [a, b] : attacking_pairs(f)) {
        if (f.at(a) == f.at(b)) {
          return "attacking cells share an entry" + where;
        }
      }
      int const w = static_cast<int>(f.basement_width());
      for (int c = 1; c <= w; ++c) {
        if (f.height(c) > 0 && f.at({c, 1}) != c) {
          return "first row of column " + std::to_string(c) + " is not "
                 + std::to_string(c) + where;
        }
      }
      for (auto const& t : triples(f)) {
        if (t.kind == TripleKind::type_b && !(f.at(t.cells[0]) < f.at(t.cells[1]))) {
          return "type B triple with left entry not below the right one" + where;
        }
      }
      // a1 = (i, j), a2 = (i-1, j-1), a3 = (i-1, j).  Only adjacent rows:
      // with a2 lower still, {1:(1),2:(2,2,1)} is a counterexample.
      for (int i = 2; i <= w; ++i) {
        int const top = std::min(f.height(i), f.height(i - 1));
        for (int j = 1; j <= top; ++j) {
          int const a1 = f.at({i, j});
          int const a2 = f.at({i - 1, j - 1});
          int const a3 = f.at({i - 1, j});
          if (a1 <= a2 && !(a3 > a1)) {
            return "type A order condition fails at column " + std::to_string(i)
                   + " row " + std::to_string(j) + where;
          }
        }
      }
      return {};
    }

  }  // namespace

  std::vector<NatMatrix> all_matrices(int total, int index) {
    std::vector<NatMatrix> out;
    auto const             cells = static_cast<std::size_t>(index * index);
    for (int t = 0; t <= total; ++t) {
      for (auto const& c : compositions(t, cells)) {
        NatMatrix a;
        for (std::size_t k = 0; k < cells; ++k) {
          a.add(static_cast<int>(k) / index + 1, static_cast<int>(k) % index + 1, c[k]);
        }
        out.push_back(std::move(a));
      }
    }
    return out;
  }

  std::vector<Filling> all_ssaf(int max_cells, int entry_bound) {
    std::vector<Filling> out;
    for (auto const& gamma :
         shapes_up_to(max_cells, static_cast<std::size_t>(entry_bound))) {
      auto fs = enumerate_ssaf(gamma);
      out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
  }

  SuiteReport verify_schur(int max_n, Execution ex) {
    auto const ps = partitions_up_to(max_n);
    return run("schur", ps.size(), ex, [&ps](std::size_t i) -> std::string {
      auto const& lambda = ps[i];
      if (!verify_schur_decomposition(lambda, lambda.sum())) {
        return "sum of e_hat over rearrangements of " + to_string(lambda)
               + " differs from the Schur polynomial";
      }
      return {};
    });
  }

  SuiteReport verify_rsk_roundtrip(int total, int index, Execution ex) {
    auto const ms = all_matrices(total, index);
    return run("rsk-roundtrip", ms.size(), ex, [&ms](std::size_t i) {
      return check_phi(ms[i]);
    });
  }

  SuiteReport verify_triangularity(int sum, int width, Execution ex) {
    std::vector<std::pair<int, int>> cases;
    for (int n = 0; n <= sum; ++n) {
      for (int m = 1; m <= width; ++m) {
        cases.emplace_back(n, m);
      }
    }
    return run("triangularity", cases.size(), ex, [&cases](std::size_t i) -> std::string {
      auto const [n, m] = cases[i];
      auto const t      = transition_matrix(n, static_cast<std::size_t>(m));
      if (!t.is_upper_unitriangular()) {
        return "transition_matrix(" + std::to_string(n) + "," + std::to_string(m)
               + ") is not unit upper triangular";
      }
      for (std::size_t r = 0; r < t.index.size(); ++r) {
        for (std::size_t c = 0; c < t.index.size(); ++c) {
          if (t.values[r][c] != 0
              && !reverse_dominance_leq(t.index[c], t.index[r])) {
            return "NK" + to_string(t.index[r]) + to_string(t.index[c])
                   + " is nonzero outside reverse dominance";
          }
        }
      }
      return {};
    });
  }

  SuiteReport verify_standardization(int max_n, int entry_bound, Execution ex) {
    auto const ps = partitions_up_to(max_n);
    return run("standardization", ps.size(), ex,
               [&ps, entry_bound](std::size_t i) -> std::string {
                 for (auto const& t : enumerate_ssyt(ps[i], entry_bound)) {
                   if (skyline(psi(t)) != psi(standardize_ssyt(t))) {
                     return "skyline(psi(T)) != psi(std(T)) for T=" + to_string(t);
                   }
                 }
                 return {};
               });
  }

  SuiteReport verify_knuth(int length, int alphabet, Execution ex) {
    auto const words = words_up_to(length, alphabet);
    return run("knuth", words.size(), ex, [&words](std::size_t i) -> std::string {
      Word const&   w = words[i];
      Filling const f = insertion_filling(w);
      for (auto const& v : knuth_class(w, 1u << 16).words) {
        if (insertion_filling(v) != f) {
          return "Knuth-equivalent words " + to_string(w) + " and " + to_string(v)
                 + " give different insertion fillings";
        }
      }
      return {};
    });
  }

  SuiteReport verify_insertion(int max_cells, int entry_bound, Execution ex) {
    auto const shapes = shapes_up_to(max_cells, static_cast<std::size_t>(entry_bound));
    return run("insertion", shapes.size(), ex,
               [&shapes, entry_bound](std::size_t i) -> std::string {
                 for (auto const& f : enumerate_ssaf(shapes[i])) {
                   auto const p = rho(f);
                   for (int k = 1; k <= entry_bound; ++k) {
                     auto const ins = insert(f, k);
                     std::string const what
                         = " inserting " + std::to_string(k) + " into " + to_string(f);
                     if (!is_ssaf(ins.filling)) {
                       return "non-SSAF result" + what;
                     }
                     auto const rev = reverse_schensted_insert(p, k);
                     if (rho(ins.filling) != rev.tableau) {
                       return "rho does not commute with insertion" + what;
                     }
                     if (ins.trace.termination.row != rev.row) {
                       return "termination row differs from the new tableau cell" + what;
                     }
                     auto const del
                         = delete_from_column(ins.filling, ins.trace.termination.column);
                     if (del.filling != f || del.letter != k) {
                       return "deletion does not undo" + what;
                     }
                   }
                 }
                 return {};
               });
  }

  SuiteReport verify_psi(int max_n, int n, Execution ex) {
    std::vector<Partition> ps;
    for (auto const& lambda : partitions_up_to(max_n)) {
      if (lambda.length() <= static_cast<std::size_t>(n)) {
        ps.push_back(lambda);
      }
    }
    return run("psi", ps.size(), ex, [&ps, n](std::size_t i) -> std::string {
      auto const&     lambda = ps[i];
      auto const      vars   = static_cast<std::size_t>(n);
      std::set<std::vector<std::vector<int>>> image;
      for (auto const& t : enumerate_ssyt(lambda, n)) {
        Filling const f = psi(t);
        std::string const what = " for T=" + to_string(t);
        if (!is_ssaf(f)) {
          return "psi(T) is not an SSAF" + what;
        }
        if (sort_to_partition(f.shape()) != lambda) {
          return "shape of psi(T) does not rearrange lambda" + what;
        }
        if (f.basement_width() > vars || weight(f, vars) != weight(t, vars)) {
          return "psi does not preserve weight" + what;
        }
        if (psi_inverse(f) != t) {
          return "psi_inverse(psi(T)) != T" + what;
        }
        if (!image.insert(key(f)).second) {
          return "psi is not injective" + what;
        }
      }
      std::set<std::vector<std::vector<int>>> target;
      for (auto const& gamma : rearrangements(lambda, vars)) {
        for (auto const& f : enumerate_ssaf(gamma)) {
          target.insert(key(f));
        }
      }
      if (image != target) {
        return "image of psi on SSYT(" + to_string(lambda) + "," + std::to_string(n)
               + ") is not the union of SSAF over rearrangements";
      }
      return {};
    });
  }

  SuiteReport verify_lemmas(int max_cells, int alphabet, Execution ex) {
    auto const shapes = shapes_up_to(max_cells, static_cast<std::size_t>(alphabet));
    return run("lemmas", shapes.size(), ex,
               [&shapes, alphabet](std::size_t i) -> std::string {
                 std::string why;
                 for_each_filling(shapes[i], alphabet, [&why](Filling const& f) {
                   if (why.empty()) {
                     why = check_lemmas(f);
                   }
                 });
                 return why;
               });
  }

  SuiteReport verify_random(std::uint64_t seed, std::size_t samples, Execution ex) {
    // Draw every instance up front so both execution paths see the same ones.
    std::mt19937_64                    rng(seed);
    std::uniform_int_distribution<int> count(0, 2);
    std::uniform_int_distribution<int> letter(1, 7);
    std::uniform_int_distribution<int> len(6, 12);
    std::vector<NatMatrix>             ms;
    std::vector<Word>                  words;
    for (std::size_t s = 0; s < samples; ++s) {
      NatMatrix a;
      for (int r = 1; r <= 5; ++r) {
        for (int c = 1; c <= 5; ++c) {
          a.add(r, c, count(rng) == 2 ? 1 : 0);
        }
      }
      ms.push_back(std::move(a));
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& x : w) {
        x = letter(rng);
      }
      words.push_back(std::move(w));
    }
    return run("random", samples, ex, [&ms, &words](std::size_t i) -> std::string {
      if (auto why = check_phi(ms[i]); !why.empty()) {
        return why;
      }
      Filling const f = insertion_filling(words[i]);
      for (auto const& v : knuth_neighbours(words[i])) {
        if (insertion_filling(v) != f) {
          return "Knuth-equivalent words " + to_string(words[i]) + " and "
                 + to_string(v) + " give different insertion fillings";
        }
      }
      return {};
    });
  }

  std::vector<std::string> suite_names() {
    return {"schur",     "rsk-roundtrip", "triangularity", "standardization",
            "knuth",     "insertion",     "psi",           "lemmas",
            "random"};
  }

  namespace {
    int bounded(std::optional<int> value, int fallback, int lo, int hi, char const* flag) {
      int const v = value.value_or(fallback);
      if (v < lo || v > hi) {
        throw std::invalid_argument(std::string("--") + flag + " must lie in ["
                                    + std::to_string(lo) + ", " + std::to_string(hi)
                                    + "]");
      }
      return v;
    }
  }  // namespace

  SuiteReport run_suite(std::string_view name, SuiteBounds const& b, Execution ex) {
    if (name == "schur") {
      return verify_schur(bounded(b.max_n, 6, 0, 8, "max-n"), ex);
    }
    if (name == "rsk-roundtrip") {
      return verify_rsk_roundtrip(bounded(b.total, 4, 0, 6, "total"),
                                  bounded(b.index, 3, 1, 4, "index"),
                                  ex);
    }
    if (name == "triangularity") {
      return verify_triangularity(bounded(b.sum, 5, 0, 7, "sum"),
                                  bounded(b.width, 4, 1, 5, "width"),
                                  ex);
    }
    if (name == "standardization") {
      return verify_standardization(bounded(b.max_n, 5, 0, 7, "max-n"),
                                    bounded(b.width, 4, 1, 6, "width"),
                                    ex);
    }
    if (name == "knuth") {
      return verify_knuth(bounded(b.max_n, 5, 0, 7, "max-n"),
                          bounded(b.width, 4, 1, 5, "width"),
                          ex);
    }
    if (name == "insertion") {
      return verify_insertion(bounded(b.max_n, 5, 0, 6, "max-n"),
                              bounded(b.width, 5, 1, 6, "width"),
                              ex);
    }
    if (name == "psi") {
      return verify_psi(bounded(b.max_n, 5, 0, 6, "max-n"),
                        bounded(b.width, 5, 1, 6, "width"),
                        ex);
    }
    if (name == "lemmas") {
      return verify_lemmas(bounded(b.max_n, 5, 0, 5, "max-n"),
                           bounded(b.width, 5, 1, 5, "width"),
                           ex);
    }
    if (name == "random") {
      return verify_random(b.seed.value_or(1),
                           static_cast<std::size_t>(bounded(b.total, 200, 1, 5000, "total")),
                           ex);
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }

}  // namespace skyline
