#include "skyline/composition.hpp"

#include <algorithm>  // for sort, max_element, prev_permutation
#include <charconv>   // for from_chars
#include <functional> // for greater
#include <numeric>    // for accumulate
#include <stdexcept>  // for invalid_argument

namespace skyline {

  namespace {
    void check_non_negative(std::vector<int> const& parts) {
      for (int p : parts) {
        if (p < 0) {
          throw std::invalid_argument("composition parts must be >= 0, found "
                                      + std::to_string(p));
        }
      }
    }

    std::size_t trimmed_width(std::vector<int> const& parts) {
      std::size_t w = parts.size();
      while (w > 0 && parts[w - 1] == 0) {
        --w;
      }
      return w;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Composition
  ////////////////////////////////////////////////////////////////////////

  Composition::Composition(std::vector<int> parts) : _parts(std::move(parts)) {
    check_non_negative(_parts);
  }

  Composition::Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  int Composition::sum() const noexcept {
    return std::accumulate(_parts.begin(), _parts.end(), 0);
  }

  int Composition::max_part() const noexcept {
    return _parts.empty() ? 0 : *std::max_element(_parts.begin(), _parts.end());
  }

  Composition Composition::padded(std::size_t width) const {
    std::vector<int> p = _parts;
    if (p.size() < width) {
      p.resize(width, 0);
    }
    return Composition(std::move(p));
  }

  Composition Composition::trimmed() const {
    return Composition(std::vector<int>(
        _parts.begin(),
        _parts.begin() + static_cast<std::ptrdiff_t>(trimmed_width(_parts))));
  }

  bool operator==(Composition const& lhs, Composition const& rhs) {
    std::size_t const w = std::max(lhs.width(), rhs.width());
    for (std::size_t i = 1; i <= w; ++i) {
      if (lhs.part(i) != rhs.part(i)) {
        return false;
      }
    }
    return true;
  }

  bool operator<(Composition const& lhs, Composition const& rhs) {
    auto const& a  = lhs._parts;
    auto const& b  = rhs._parts;
    auto const  wa = static_cast<std::ptrdiff_t>(trimmed_width(a));
    auto const  wb = static_cast<std::ptrdiff_t>(trimmed_width(b));
    return std::lexicographical_compare(
        a.begin(), a.begin() + wa, b.begin(), b.begin() + wb);
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<int> parts) : _parts(std::move(parts)) {
    for (std::size_t i = 0; i < _parts.size(); ++i) {
      if (_parts[i] <= 0) {
        throw std::invalid_argument("partition parts must be positive");
      }
      if (i > 0 && _parts[i] > _parts[i - 1]) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
      }
    }
  }

  Partition::Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  int Partition::sum() const noexcept {
    return std::accumulate(_parts.begin(), _parts.end(), 0);
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  Partition sort_to_partition(Composition const& gamma) {
    std::vector<int> p;
    p.reserve(gamma.width());
    for (int x : gamma) {
      if (x > 0) {
        p.push_back(x);
      }
    }
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition(std::move(p));
  }

  Partition conjugate(Partition const& lambda) {
    std::vector<int> c;
    if (lambda.length() == 0) {
      return Partition();
    }
    c.assign(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda) {
      for (int i = 0; i < part; ++i) {
        ++c[static_cast<std::size_t>(i)];
      }
    }
    return Partition(std::move(c));
  }

  std::vector<Composition> rearrangements(Partition const& lambda,
                                          std::size_t      width) {
    if (width < lambda.length()) {
      throw std::invalid_argument("rearrangements: width "
                                  + std::to_string(width)
                                  + " is smaller than the number of parts of "
                                  + to_string(lambda));
    }
    std::vector<int> v = lambda.parts();
    v.resize(width, 0);
    // v is sorted decreasing, which is the lexicographically largest
    // arrangement; prev_permutation walks down from there.
    std::vector<Composition> out;
    do {
      out.emplace_back(v);
    } while (std::prev_permutation(v.begin(), v.end()));
    return out;
  }

  namespace {
    void compositions_rec(int                       remaining,
                          std::size_t               pos,
                          std::vector<int>&         cur,
                          std::vector<Composition>& out) {
      if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
      }
      for (int x = remaining; x >= 0; --x) {
        cur[pos] = x;
        compositions_rec(remaining - x, pos + 1, cur, out);
      }
    }

    void partitions_rec(int                     remaining,
                        int                     max_part,
                        std::vector<int>&       cur,
                        std::vector<Partition>& out) {
      if (remaining == 0) {
        out.emplace_back(cur);
        return;
      }
      for (int x = std::min(remaining, max_part); x >= 1; --x) {
        cur.push_back(x);
        partitions_rec(remaining - x, x, cur, out);
        cur.pop_back();
      }
    }
  }  // namespace

  std::vector<Composition> compositions(int sum, std::size_t width) {
    if (sum < 0) {
      throw std::invalid_argument("compositions: negative sum");
    }
    std::vector<Composition> out;
    if (width == 0) {
      if (sum == 0) {
        out.emplace_back();
      }
      return out;
    }
    std::vector<int> cur(width, 0);
    compositions_rec(sum, 0, cur, out);
    return out;
  }

  std::vector<Partition> partitions(int n) {
    if (n < 0) {
      throw std::invalid_argument("partitions: negative n");
    }
    std::vector<Partition> out;
    std::vector<int>       cur;
    partitions_rec(n, n, cur, out);
    return out;
  }

  std::vector<int> tail_sums(Composition const& gamma) {
    std::vector<int> t(gamma.width(), 0);
    int              acc = 0;
    for (std::size_t i = gamma.width(); i-- > 0;) {
      acc += gamma[i];
      t[i] = acc;
    }
    return t;
  }

  bool reverse_dominance_leq(Composition const& mu, Composition const& gamma) {
    if (mu.sum() != gamma.sum()) {
      throw std::invalid_argument("reverse_dominance_leq: " + to_string(mu)
                                  + " and " + to_string(gamma)
                                  + " have different sums");
    }
    std::size_t const w  = std::max(mu.width(), gamma.width());
    auto const        tm = tail_sums(mu.padded(w));
    auto const        tg = tail_sums(gamma.padded(w));
    for (std::size_t k = 0; k < w; ++k) {
      if (tm[k] > tg[k]) {
        return false;
      }
    }
    return true;
  }

  namespace {
    template <typename Range>
    std::string join_parens(Range const& r) {
      std::string s = "(";
      bool        first = true;
      for (int x : r) {
        if (!first) {
          s += ',';
        }
        first = false;
        s += std::to_string(x);
      }
      s += ')';
      return s;
    }
  }  // namespace

  std::string to_string(Composition const& gamma) {
    return join_parens(gamma);
  }

  std::string to_string(Partition const& lambda) {
    return join_parens(lambda);
  }

  Composition parse_composition(std::string_view text) {
    auto strip = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    };
    text = strip(text);
    if (text.size() >= 2
        && ((text.front() == '(' && text.back() == ')')
            || (text.front() == '[' && text.back() == ']'))) {
      text = strip(text.substr(1, text.size() - 2));
    }
    std::vector<int> parts;
    if (text.empty()) {
      return Composition();
    }
    while (true) {
      auto const       comma = text.find(',');
      std::string_view tok   = strip(text.substr(0, comma));
      int              value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("malformed composition literal: expected "
                                    "comma-separated non-negative integers");
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
    }
    return Composition(std::move(parts));
  }

}  // namespace skyline
