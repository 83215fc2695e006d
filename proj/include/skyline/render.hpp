// Text renderings of fillings, tableaux and insertion traces.

#ifndef SKYLINE_RENDER_HPP_
#define SKYLINE_RENDER_HPP_

#include <cstdio>  // for FILE
#include <string>  // for string

#include "filling.hpp"
#include "insertion.hpp"
#include "tableau.hpp"

namespace skyline {

  //! Nonzero columns only: "{1:(1),4:(4,4,3),5:(5,2)}", columns bottom to
  //! top.  "{}" for an empty filling.
  std::string to_string(Filling const& f);

  //! Rows bottom first: "[[1,2,3],[2,5]]".
  std::string to_string(Ssyt const& t);
  std::string to_string(ReverseSsyt const& t);

  std::string to_string(std::vector<int> const& word);

  //! Rows printed top-down (French orientation) with the basement bracketed
  //! on the last line; every cell has the same width.  With `color` the
  //! basement is dimmed using ANSI escapes.
  std::string render_ascii(Filling const& f, bool color = false);

  //! Rows printed top-down, bottom row last.
  std::string render_ascii(Ssyt const& t);
  std::string render_ascii(ReverseSsyt const& t);

  //! "I=(4,3,2), P=((4,3),(5,2),(2,1)), t=(2,1)"
  std::string format_trace(InsertionTrace const& trace);

  //! Reads SKYLINE_COLOR: "never" disables colour, "auto" (or unset) enables
  //! it when `stream` is a terminal.
  bool color_enabled(std::FILE* stream);

}  // namespace skyline

#endif  // SKYLINE_RENDER_HPP_
