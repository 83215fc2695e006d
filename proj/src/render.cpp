#include "skyline/render.hpp"

#include <algorithm>  // for max
#include <cstdlib>    // for getenv
#include <string>     // for string

#include <unistd.h>  // for isatty, fileno

namespace skyline {

  namespace {
    std::string pad_left(std::string const& s, std::size_t width) {
      return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
    }

    void rstrip(std::string& line) {
      while (!line.empty() && line.back() == ' ') {
        line.pop_back();
      }
    }

    std::string cell_pair(Cell c) {
      return "(" + std::to_string(c.column) + "," + std::to_string(c.row) + ")";
    }

    std::string rows_to_string(std::vector<std::vector<int>> const& rows) {
      std::string out = "[";
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) {
          out += ",";
        }
        out += "[";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          if (c > 0) {
            out += ",";
          }
          out += std::to_string(rows[r][c]);
        }
        out += "]";
      }
      return out + "]";
    }

    std::string render_rows(std::vector<std::vector<int>> const& rows) {
      std::size_t digits = 1;
      for (auto const& row : rows) {
        for (int v : row) {
          digits = std::max(digits, std::to_string(v).size());
        }
      }
      std::string out;
      for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        std::string line;
        for (std::size_t c = 0; c < it->size(); ++c) {
          if (c > 0) {
            line += " ";
          }
          line += pad_left(std::to_string((*it)[c]), digits);
        }
        out += line + "\n";
      }
      return out;
    }
  }  // namespace

  std::string to_string(Filling const& f) {
    std::string out = "{";
    bool        first = true;
    int const   w     = static_cast<int>(f.basement_width());
    for (int c = 1; c <= w; ++c) {
      if (f.height(c) == 0) {
        continue;
      }
      if (!first) {
        out += ",";
      }
      first = false;
      out += std::to_string(c) + ":" + to_string(f.column(c));
    }
    return out + "}";
  }

  std::string to_string(std::vector<int> const& word) {
    std::string out = "(";
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += std::to_string(word[i]);
    }
    return out + ")";
  }

  std::string to_string(Ssyt const& t) {
    return rows_to_string(t.rows());
  }

  std::string to_string(ReverseSsyt const& t) {
    return rows_to_string(t.rows());
  }

  std::string render_ascii(Filling const& f, bool color) {
    int const         w      = static_cast<int>(f.basement_width());
    std::size_t const digits = std::to_string(std::max(w, 1)).size();
    std::string       out;
    for (int row = f.max_height(); row >= 1; --row) {
      std::string line;
      for (int col = 1; col <= w; ++col) {
        if (row <= f.height(col)) {
          line += " " + pad_left(std::to_string(f.at({col, row})), digits) + " ";
        } else {
          line += std::string(digits + 2, ' ');
        }
      }
      rstrip(line);
      out += line + "\n";
    }
    std::string basement;
    for (int col = 1; col <= w; ++col) {
      basement += "[" + pad_left(std::to_string(col), digits) + "]";
    }
    if (color && !basement.empty()) {
      basement = "\x1b[2m" + basement + "\x1b[0m";
    }
    return out + basement + "\n";
  }

  std::string render_ascii(Ssyt const& t) {
    return render_rows(t.rows());
  }

  std::string render_ascii(ReverseSsyt const& t) {
    return render_rows(t.rows());
  }

  std::string format_trace(InsertionTrace const& trace) {
    std::string path = "(";
    for (std::size_t i = 0; i < trace.path.size(); ++i) {
      if (i > 0) {
        path += ",";
      }
      path += cell_pair(trace.path[i]);
    }
    path += ")";
    return "I=" + to_string(trace.sequence) + ", P=" + path
           + ", t=" + cell_pair(trace.termination);
  }

  bool color_enabled(std::FILE* stream) {
    char const* mode = std::getenv("SKYLINE_COLOR");
    if (mode != nullptr && std::string(mode) == "never") {
      return false;
    }
    return ::isatty(::fileno(stream)) != 0;
  }

}  // namespace skyline
