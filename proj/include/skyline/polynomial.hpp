// Sparse multivariate polynomials with exact integer coefficients.

#ifndef SKYLINE_POLYNOMIAL_HPP_
#define SKYLINE_POLYNOMIAL_HPP_

#include <cstddef>      // for size_t
#include <map>          // for map
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include <boost/multiprecision/cpp_int.hpp>

namespace skyline {

  using BigInt   = boost::multiprecision::cpp_int;
  using Exponent = std::vector<int>;

  //! Polynomial in x_1, ..., x_vars.  Zero coefficients are never stored and
  //! every exponent vector has exactly `vars()` entries.
  class SparsePolynomial {
   public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(std::size_t vars) : _vars(vars) {}

    std::size_t vars() const noexcept {
      return _vars;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    //! Throws `std::invalid_argument` on a length mismatch or negative
    //! exponent.
    void add_term(Exponent const& e, BigInt const& c);

    //! Both operands are first embedded in the larger variable count.
    SparsePolynomial& operator+=(SparsePolynomial const& other);

    //! Zero for absent monomials; shorter or longer exponents are compared
    //! after padding with zeros.
    BigInt coefficient(Exponent const& e) const;

    //! Sum of all coefficients.
    BigInt mass() const;

    //! Same polynomial in `vars` variables.  Throws when some monomial uses a
    //! variable beyond `vars`.
    SparsePolynomial embedded(std::size_t vars) const;

    std::map<Exponent, BigInt> const& terms() const noexcept {
      return _terms;
    }

    //! Equal as polynomials in the common width.
    friend bool operator==(SparsePolynomial const& lhs, SparsePolynomial const& rhs);

   private:
    std::size_t                _vars = 0;
    std::map<Exponent, BigInt> _terms;
  };

  SparsePolynomial operator+(SparsePolynomial lhs, SparsePolynomial const& rhs);

  //! "x1*x3^3*x4^2 + 2*x1*x2*x3", terms in decreasing lexicographic order of
  //! exponent; "0" for the zero polynomial.
  std::string to_string(SparsePolynomial const& p);

  //! Inverse of `to_string`; whitespace is ignored and repeated monomials
  //! accumulate.  Throws `std::invalid_argument` on malformed input.
  SparsePolynomial parse_polynomial(std::string_view text, std::size_t vars);

}  // namespace skyline

#endif  // SKYLINE_POLYNOMIAL_HPP_
