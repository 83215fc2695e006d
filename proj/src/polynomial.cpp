#include "skyline/polynomial.hpp"

#include <algorithm>  // for max, any_of
#include <cctype>     // for isdigit, isspace
#include <stdexcept>  // for invalid_argument

namespace skyline {

  void SparsePolynomial::add_term(Exponent const& e, BigInt const& c) {
    if (e.size() != _vars) {
      throw std::invalid_argument("add_term: exponent has "
                                  + std::to_string(e.size()) + " entries, expected "
                                  + std::to_string(_vars));
    }
    if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; })) {
      throw std::invalid_argument("add_term: negative exponent");
    }
    if (c == 0) {
      return;
    }
    auto [it, inserted] = _terms.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  SparsePolynomial& SparsePolynomial::operator+=(SparsePolynomial const& other) {
    std::size_t const n = std::max(_vars, other._vars);
    if (n != _vars) {
      *this = embedded(n);
    }
    for (auto const& [e, c] : other._terms) {
      Exponent padded = e;
      padded.resize(n, 0);
      add_term(padded, c);
    }
    return *this;
  }

  BigInt SparsePolynomial::coefficient(Exponent const& e) const {
    Exponent key = e;
    if (key.size() > _vars) {
      if (std::any_of(key.begin() + static_cast<std::ptrdiff_t>(_vars),
                      key.end(),
                      [](int v) { return v != 0; })) {
        return 0;
      }
    }
    key.resize(_vars, 0);
    auto it = _terms.find(key);
    return it == _terms.end() ? BigInt(0) : it->second;
  }

  BigInt SparsePolynomial::mass() const {
    BigInt total = 0;
    for (auto const& [e, c] : _terms) {
      total += c;
    }
    return total;
  }

  SparsePolynomial SparsePolynomial::embedded(std::size_t vars) const {
    SparsePolynomial out(vars);
    for (auto const& [e, c] : _terms) {
      Exponent key = e;
      for (std::size_t i = vars; i < key.size(); ++i) {
        if (key[i] != 0) {
          throw std::invalid_argument("embedded: monomial uses x"
                                      + std::to_string(i + 1));
        }
      }
      key.resize(vars, 0);
      out._terms.emplace(std::move(key), c);
    }
    return out;
  }

  bool operator==(SparsePolynomial const& lhs, SparsePolynomial const& rhs) {
    if (lhs._terms.size() != rhs._terms.size()) {
      return false;
    }
    for (auto const& [e, c] : lhs._terms) {
      if (rhs.coefficient(e) != c) {
        return false;
      }
    }
    return true;
  }

  SparsePolynomial operator+(SparsePolynomial lhs, SparsePolynomial const& rhs) {
    lhs += rhs;
    return lhs;
  }

  std::string to_string(SparsePolynomial const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      auto const& [e, c] = *it;
      bool const  negative = c < 0;
      BigInt      mag      = negative ? BigInt(-c) : c;
      if (!out.empty()) {
        out += negative ? " - " : " + ";
      } else if (negative) {
        out += "-";
      }
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
          continue;
        }
        if (!mono.empty()) {
          mono += "*";
        }
        mono += "x" + std::to_string(i + 1);
        if (e[i] > 1) {
          mono += "^" + std::to_string(e[i]);
        }
      }
      if (mono.empty()) {
        out += mag.str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.str() + "*" + mono;
      }
    }
    return out;
  }

  namespace {
    class Parser {
     public:
      Parser(std::string_view text, std::size_t vars) : _vars(vars) {
        for (char ch : text) {
          if (!std::isspace(static_cast<unsigned char>(ch))) {
            _s.push_back(ch);
          }
        }
      }

      SparsePolynomial run() {
        SparsePolynomial p(_vars);
        if (_s == "0") {
          return p;
        }
        if (_s.empty()) {
          fail("empty input");
        }
        bool negative = false;
        if (peek() == '-') {
          negative = true;
          ++_pos;
        }
        while (true) {
          term(p, negative);
          if (_pos == _s.size()) {
            break;
          }
          char const op = _s[_pos++];
          if (op != '+' && op != '-') {
            fail("expected '+' or '-'");
          }
          negative = op == '-';
        }
        return p;
      }

     private:
      char peek() const {
        return _pos < _s.size() ? _s[_pos] : '\0';
      }

      [[noreturn]] void fail(std::string const& why) const {
        throw std::invalid_argument("parse_polynomial: " + why + " at offset "
                                    + std::to_string(_pos));
      }

      std::string digits() {
        std::size_t const start = _pos;
        while (_pos < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected a number");
        }
        return _s.substr(start, _pos - start);
      }

      void term(SparsePolynomial& p, bool negative) {
        BigInt   coeff = 1;
        Exponent e(_vars, 0);
        bool     need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          coeff = BigInt(digits());
          need_factor = false;
          if (peek() == '*') {
            ++_pos;
            need_factor = true;
          }
        }
        if (need_factor) {
          factor(e);
          while (peek() == '*') {
            ++_pos;
            factor(e);
          }
        }
        p.add_term(e, negative ? BigInt(-coeff) : coeff);
      }

      void factor(Exponent& e) {
        if (peek() != 'x') {
          fail("expected a variable");
        }
        ++_pos;
        std::size_t const index = std::stoul(digits());
        if (index < 1 || index > _vars) {
          fail("variable x" + std::to_string(index) + " out of range");
        }
        int power = 1;
        if (peek() == '^') {
          ++_pos;
          power = std::stoi(digits());
        }
        e[index - 1] += power;
      }

      std::string _s;
      std::size_t _pos = 0;
      std::size_t _vars;
    };
  }  // namespace

  SparsePolynomial parse_polynomial(std::string_view text, std::size_t vars) {
    return Parser(text, vars).run();
  }

}  // namespace skyline
