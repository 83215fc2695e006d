#include "skyline/enumerate.hpp"

#include <algorithm>  // for sort
#include <stdexcept>  // for invalid_argument, logic_error

namespace skyline {

  namespace {

    // Fills cells bottom row first, left to right.  Every triple is checked
    // as soon as its last cell in this order is placed: type A triples at
    // a2, type B triples at a3.
    class SsafSearch {
     public:
      explicit SsafSearch(Composition const& gamma)
          : _gamma(gamma),
            _width(static_cast<int>(gamma.width())),
            _f(gamma.width(), {}) {
        for (int row = 1; row <= gamma.max_part(); ++row) {
          for (int col = 1; col <= _width; ++col) {
            if (gamma.part(static_cast<std::size_t>(col)) >= row) {
              _order.push_back({col, row});
            }
          }
        }
      }

      std::vector<Filling> run() {
        recurse(0);
        return std::move(_out);
      }

     private:
      int h(int col) const {
        return _gamma.part(static_cast<std::size_t>(col));
      }

      bool admissible(Cell c, int v) const {
        // entries in earlier columns of the same row are all placed
        for (int i = 1; i < c.column; ++i) {
          if (h(i) < c.row) {
            continue;
          }
          if (_f.at({i, c.row}) == v) {
            return false;
          }
        }
        // cells one row down and strictly left attack c; the basement counts
        for (int i = 1; i < c.column; ++i) {
          if (h(i) >= c.row - 1 && _f.at({i, c.row - 1}) == v) {
            return false;
          }
        }
        for (int i = 1; i < c.column; ++i) {
          if (h(i) >= h(c.column)) {
            if (!is_inversion_triple(TripleKind::type_a,
                                     _f.at({i, c.row}),
                                     v,
                                     _f.at({i, c.row - 1}))) {
              return false;
            }
          } else if (c.row - 1 <= h(i)) {
            if (!is_inversion_triple(TripleKind::type_b,
                                     _f.at({i, c.row - 1}),
                                     _f.at({c.column, c.row - 1}),
                                     v)) {
              return false;
            }
          }
        }
        return true;
      }

      void recurse(std::size_t pos) {
        if (pos == _order.size()) {
          if (!is_ssaf(_f)) {
            throw std::logic_error("enumerate_ssaf: pruned search produced a non-SSAF");
          }
          _out.push_back(_f);
          return;
        }
        Cell const c     = _order[pos];
        int const  below = _f.at(c.below());
        for (int v = 1; v <= below; ++v) {
          if (admissible(c, v)) {
            _f.push(c.column, v);
            recurse(pos + 1);
            _f.pop(c.column);
          }
        }
      }

      Composition          _gamma;
      int                  _width;
      Filling              _f;
      std::vector<Cell>    _order;
      std::vector<Filling> _out;
    };

    class SsytSearch {
     public:
      SsytSearch(Partition const& lambda, int n) : _lambda(lambda), _n(n) {
        _rows.resize(lambda.length());
      }

      std::vector<Ssyt> run() {
        recurse(0, 0);
        return std::move(_out);
      }

     private:
      void recurse(std::size_t r, std::size_t c) {
        if (r == _lambda.length()) {
          _out.emplace_back(_rows);
          return;
        }
        if (c == static_cast<std::size_t>(_lambda[r])) {
          recurse(r + 1, 0);
          return;
        }
        int lo = 1;
        if (c > 0) {
          lo = std::max(lo, _rows[r][c - 1]);
        }
        if (r > 0) {
          lo = std::max(lo, _rows[r - 1][c] + 1);
        }
        // leave room for the rows still to come above this cell
        int const hi = _n - static_cast<int>(count_above(r, c));
        for (int v = lo; v <= hi; ++v) {
          _rows[r].push_back(v);
          recurse(r, c + 1);
          _rows[r].pop_back();
        }
      }

      std::size_t count_above(std::size_t r, std::size_t c) const {
        std::size_t k = 0;
        for (std::size_t s = r + 1; s < _lambda.length(); ++s) {
          if (static_cast<std::size_t>(_lambda[s]) > c) {
            ++k;
          }
        }
        return k;
      }

      Partition                     _lambda;
      int                           _n;
      std::vector<std::vector<int>> _rows;
      std::vector<Ssyt>             _out;
    };

  }  // namespace

  std::vector<Filling> enumerate_ssaf(Composition const& gamma) {
    auto out = SsafSearch(gamma).run();
    std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
    keyed.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      keyed.emplace_back(reading_word(out[i]), i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Filling> sorted;
    sorted.reserve(out.size());
    for (auto const& [word, i] : keyed) {
      sorted.push_back(std::move(out[i]));
    }
    return sorted;
  }

  std::vector<Ssyt> enumerate_ssyt(Partition const& lambda, int n) {
    if (n < 0) {
      throw std::invalid_argument("enumerate_ssyt: alphabet bound must be non-negative");
    }
    return SsytSearch(lambda, n).run();
  }

  std::vector<int> weight(Ssyt const& t, std::size_t vars) {
    std::vector<int> e(vars, 0);
    for (auto const& row : t.rows()) {
      for (int v : row) {
        if (static_cast<std::size_t>(v) > vars) {
          throw std::invalid_argument("weight: entry " + std::to_string(v)
                                      + " exceeds variable count");
        }
        ++e[static_cast<std::size_t>(v - 1)];
      }
    }
    return e;
  }

  SparsePolynomial e_hat(Composition const& gamma) {
    SparsePolynomial p(gamma.width());
    for (auto const& f : enumerate_ssaf(gamma)) {
      p.add_term(weight(f, gamma.width()), 1);
    }
    return p;
  }

  SparsePolynomial schur(Partition const& lambda, int n) {
    auto const       vars = static_cast<std::size_t>(std::max(n, 0));
    SparsePolynomial p(vars);
    for (auto const& t : enumerate_ssyt(lambda, n)) {
      p.add_term(weight(t, vars), 1);
    }
    return p;
  }

  BigInt nk(Composition const& gamma, Composition const& mu) {
    if (gamma.width() != mu.width()) {
      throw std::invalid_argument("nk: widths " + std::to_string(gamma.width())
                                  + " and " + std::to_string(mu.width())
                                  + " differ");
    }
    return e_hat(gamma).coefficient(mu.parts());
  }

  BigInt kostka(Partition const& lambda, Composition const& mu) {
    if (mu.width() == 0) {
      return lambda.length() == 0 ? 1 : 0;
    }
    return schur(lambda, static_cast<int>(mu.width())).coefficient(mu.parts());
  }

  bool TransitionMatrix::is_upper_unitriangular() const {
    for (std::size_t r = 0; r < values.size(); ++r) {
      if (values[r][r] != 1) {
        return false;
      }
      for (std::size_t c = 0; c < r; ++c) {
        if (values[r][c] != 0) {
          return false;
        }
      }
    }
    return true;
  }

  TransitionMatrix transition_matrix(int n, std::size_t m) {
    TransitionMatrix t;
    t.index = compositions(n, m);
    std::stable_sort(t.index.begin(), t.index.end(),
                     [](Composition const& a, Composition const& b) {
                       return tail_sums(a) > tail_sums(b);
                     });
    t.values.reserve(t.index.size());
    for (auto const& gamma : t.index) {
      SparsePolynomial const p = e_hat(gamma);
      std::vector<BigInt>    row;
      row.reserve(t.index.size());
      for (auto const& mu : t.index) {
        row.push_back(p.coefficient(mu.parts()));
      }
      t.values.push_back(std::move(row));
    }
    return t;
  }

  bool verify_schur_decomposition(Partition const& lambda, int n) {
    auto const       vars = static_cast<std::size_t>(std::max(n, 0));
    SparsePolynomial sum(vars);
    if (lambda.length() <= vars) {
      for (auto const& gamma : rearrangements(lambda, vars)) {
        sum += e_hat(gamma);
      }
    }
    return sum == schur(lambda, std::max(n, 0));
  }

}  // namespace skyline
