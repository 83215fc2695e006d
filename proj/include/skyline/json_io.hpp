// JSON encodings of the combinatorial objects.
//
//   composition   [1,0,3,2]
//   filling       {"kind":"ssaf","basement_width":m,"columns":[[...],...]}
//   tableau       {"kind":"ssyt","rows":[[...],...]}  bottom row first
//                 ("reverse-ssyt" for reverse tableaux)
//   trace         {"sequence":[...],"path":[[c,r],...],"termination":[c,r]}
//   matrix        {"entries":[[i,j,count],...]}
//   array         {"top":[...],"bottom":[...]}
//   polynomial    {"vars":n,"terms":[[[e1,...,en],coeff],...]}
//
// Decoders throw `ValidationError` naming the violated invariant.

#ifndef SKYLINE_JSON_IO_HPP_
#define SKYLINE_JSON_IO_HPP_

#include <stdexcept>  // for invalid_argument
#include <string>     // for string

#include "json.hpp"

#include "bijection.hpp"
#include "composition.hpp"
#include "filling.hpp"
#include "insertion.hpp"
#include "polynomial.hpp"
#include "tableau.hpp"
#include "verify.hpp"

namespace skyline {

  using json = nlohmann::ordered_json;

  class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  json to_json(Composition const& gamma);
  json to_json(Filling const& f);
  json to_json(Ssyt const& t);
  json to_json(ReverseSsyt const& t);
  json to_json(InsertionTrace const& trace);
  json to_json(NatMatrix const& a);
  json to_json(TwoLineArray const& w);
  json to_json(SparsePolynomial const& p);
  json to_json(SuiteReport const& r);

  Composition composition_from_json(json const& j);

  //! Accepts kind "ssaf" (which must be an SSAF) or "filling" (any
  //! filling).
  Filling filling_from_json(json const& j);

  Ssyt         ssyt_from_json(json const& j);
  ReverseSsyt  reverse_ssyt_from_json(json const& j);
  NatMatrix    matrix_from_json(json const& j);
  TwoLineArray array_from_json(json const& j);

  //! Large coefficients may be given as decimal strings.
  SparsePolynomial polynomial_from_json(json const& j);

}  // namespace skyline

#endif  // SKYLINE_JSON_IO_HPP_
