#include "skyline/json_io.hpp"

#include <cstdint>  // for int64_t
#include <limits>   // for numeric_limits

namespace skyline {

  namespace {
    [[noreturn]] void invalid(std::string const& what) {
      throw ValidationError(what);
    }

    json const& field(json const& j, char const* name, char const* object) {
      if (!j.is_object()) {
        invalid(std::string(object) + ": expected a JSON object");
      }
      auto it = j.find(name);
      if (it == j.end()) {
        invalid(std::string(object) + ": missing field \"" + name + "\"");
      }
      return *it;
    }

    std::vector<int> int_array(json const& j, std::string const& what) {
      if (!j.is_array()) {
        invalid(what + ": expected an array of integers");
      }
      std::vector<int> out;
      out.reserve(j.size());
      for (auto const& x : j) {
        if (!x.is_number_integer()) {
          invalid(what + ": expected an array of integers");
        }
        auto const v = x.get<std::int64_t>();
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
          invalid(what + ": integer out of range");
        }
        out.push_back(static_cast<int>(v));
      }
      return out;
    }

    std::vector<std::vector<int>> int_rows(json const& j, std::string const& what) {
      if (!j.is_array()) {
        invalid(what + ": expected an array of arrays");
      }
      std::vector<std::vector<int>> out;
      for (auto const& row : j) {
        out.push_back(int_array(row, what));
      }
      return out;
    }

    void expect_kind(json const& j, std::string const& kind, char const* object) {
      auto const& k = field(j, "kind", object);
      if (!k.is_string() || k.get<std::string>() != kind) {
        invalid(std::string(object) + ": kind must be \"" + kind + "\"");
      }
    }

    json cell_json(Cell c) {
      return json::array({c.column, c.row});
    }

    json coefficient_json(BigInt const& c) {
      if (c >= std::numeric_limits<std::int64_t>::min()
          && c <= std::numeric_limits<std::int64_t>::max()) {
        return json(static_cast<std::int64_t>(c));
      }
      return json(c.str());
    }

    template <typename T>
    T guard(char const* object, auto&& make) {
      try {
        return make();
      } catch (ValidationError const&) {
        throw;
      } catch (std::exception const& e) {
        invalid(std::string(object) + ": " + e.what());
      }
    }
  }  // namespace

  json to_json(Composition const& gamma) {
    return json(gamma.parts());
  }

  json to_json(Filling const& f) {
    json cols = json::array();
    for (auto const& c : f.columns()) {
      cols.push_back(c);
    }
    return {{"kind", "ssaf"}, {"basement_width", f.basement_width()}, {"columns", cols}};
  }

  json to_json(Ssyt const& t) {
    json rows = json::array();
    for (auto const& r : t.rows()) {
      rows.push_back(r);
    }
    return {{"kind", "ssyt"}, {"rows", rows}};
  }

  json to_json(ReverseSsyt const& t) {
    json rows = json::array();
    for (auto const& r : t.rows()) {
      rows.push_back(r);
    }
    return {{"kind", "reverse-ssyt"}, {"rows", rows}};
  }

  json to_json(InsertionTrace const& trace) {
    json path = json::array();
    for (Cell c : trace.path) {
      path.push_back(cell_json(c));
    }
    return {{"sequence", trace.sequence},
            {"path", path},
            {"termination", cell_json(trace.termination)}};
  }

  json to_json(NatMatrix const& a) {
    json entries = json::array();
    for (auto const& [k, v] : a.entries()) {
      entries.push_back(json::array({k.first, k.second, v}));
    }
    return {{"entries", entries}};
  }

  json to_json(TwoLineArray const& w) {
    return {{"top", w.top}, {"bottom", w.bottom}};
  }

  json to_json(SparsePolynomial const& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      terms.push_back(json::array({json(it->first), coefficient_json(it->second)}));
    }
    return {{"vars", p.vars()}, {"terms", terms}};
  }

  json to_json(SuiteReport const& r) {
    json j = {{"suite", r.suite},
              {"status", r.ok ? "ok" : "fail"},
              {"checked", r.checked}};
    if (!r.ok) {
      j["counterexample"] = r.counterexample;
    }
    return j;
  }

  Composition composition_from_json(json const& j) {
    return guard<Composition>("composition", [&] {
      return Composition(int_array(j, "composition"));
    });
  }

  Filling filling_from_json(json const& j) {
    auto const& k = field(j, "kind", "filling");
    if (!k.is_string()
        || (k.get<std::string>() != "ssaf" && k.get<std::string>() != "filling")) {
      invalid("filling: kind must be \"ssaf\" or \"filling\"");
    }
    auto const& w = field(j, "basement_width", "filling");
    if (!w.is_number_unsigned()) {
      invalid("filling: basement_width must be a non-negative integer");
    }
    auto const cols = int_rows(field(j, "columns", "filling"), "filling columns");
    Filling    f    = guard<Filling>("filling", [&] {
      return Filling(w.get<std::size_t>(), cols);
    });
    if (k.get<std::string>() == "ssaf") {
      if (!descent_set(f).empty()) {
        invalid("ssaf: filling has a descent");
      }
      if (coinv(f) != 0) {
        invalid("ssaf: filling has a non-inversion triple");
      }
    }
    return f;
  }

  Ssyt ssyt_from_json(json const& j) {
    expect_kind(j, "ssyt", "tableau");
    auto rows = int_rows(field(j, "rows", "tableau"), "tableau rows");
    return guard<Ssyt>("tableau", [&] { return Ssyt(std::move(rows)); });
  }

  ReverseSsyt reverse_ssyt_from_json(json const& j) {
    expect_kind(j, "reverse-ssyt", "tableau");
    auto rows = int_rows(field(j, "rows", "tableau"), "tableau rows");
    return guard<ReverseSsyt>("tableau", [&] { return ReverseSsyt(std::move(rows)); });
  }

  NatMatrix matrix_from_json(json const& j) {
    auto const entries = int_rows(field(j, "entries", "matrix"), "matrix entries");
    return guard<NatMatrix>("matrix", [&] {
      NatMatrix a;
      for (auto const& e : entries) {
        if (e.size() != 3) {
          invalid("matrix: each entry must be [row, column, count]");
        }
        a.add(e[0], e[1], e[2]);
      }
      return a;
    });
  }

  TwoLineArray array_from_json(json const& j) {
    TwoLineArray w;
    w.top    = int_array(field(j, "top", "array"), "array top");
    w.bottom = int_array(field(j, "bottom", "array"), "array bottom");
    guard<int>("array", [&] {
      w.validate();
      return 0;
    });
    return w;
  }

  SparsePolynomial polynomial_from_json(json const& j) {
    auto const& vars = field(j, "vars", "polynomial");
    if (!vars.is_number_unsigned()) {
      invalid("polynomial: vars must be a non-negative integer");
    }
    auto const& terms = field(j, "terms", "polynomial");
    if (!terms.is_array()) {
      invalid("polynomial: terms must be an array");
    }
    return guard<SparsePolynomial>("polynomial", [&] {
      SparsePolynomial p(vars.get<std::size_t>());
      for (auto const& t : terms) {
        if (!t.is_array() || t.size() != 2) {
          invalid("polynomial: each term must be [exponents, coefficient]");
        }
        BigInt c;
        if (t[1].is_number_integer()) {
          c = t[1].get<std::int64_t>();
        } else if (t[1].is_string()) {
          c = BigInt(t[1].get<std::string>());
        } else {
          invalid("polynomial: coefficient must be an integer or decimal string");
        }
        p.add_term(int_array(t[0], "polynomial exponents"), c);
      }
      return p;
    });
  }

}  // namespace skyline
