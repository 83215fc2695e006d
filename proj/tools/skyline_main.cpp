// skyline: command-line front end for the SSAF library.
//
// Exit status 0 means ok, 1 means the command ran and reported a failure
// (a validation error or a failing suite), 2 means a usage error.

#include <cstdio>     // for stdout
#include <fstream>    // for ifstream
#include <iostream>   // for cout, cerr
#include <iterator>   // for istreambuf_iterator
#include <stdexcept>  // for runtime_error
#include <string>     // for string

#include "CLI11.hpp"

#include "skyline/bijection.hpp"
#include "skyline/enumerate.hpp"
#include "skyline/insertion.hpp"
#include "skyline/json_io.hpp"
#include "skyline/render.hpp"
#include "skyline/verify.hpp"

namespace {

  using namespace skyline;

  constexpr int exit_ok    = 0;
  constexpr int exit_fail  = 1;
  constexpr int exit_usage = 2;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  json read_json(std::string const& path) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(path);
      if (!in) {
        throw UsageError("cannot open " + path);
      }
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
  }

  bool want_json(std::string const& format) {
    return format == "json";
  }

  void emit(json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  void show_filling(std::string const& label, Filling const& f, bool color) {
    std::cout << label << to_string(f) << "\n" << render_ascii(f, color);
  }

  int cmd_enumerate(std::string const& shape, std::string const& format) {
    Composition gamma;
    try {
      gamma = parse_composition(shape);
    } catch (std::invalid_argument const& e) {
      throw UsageError(std::string("--shape: ") + e.what());
    }
    auto const fillings = enumerate_ssaf(gamma);
    if (want_json(format)) {
      json out = json::array();
      for (auto const& f : fillings) {
        out.push_back(to_json(f));
      }
      emit(out);
      return exit_ok;
    }
    bool const color = color_enabled(stdout);
    std::cout << fillings.size() << " SSAF(s) of shape " << to_string(gamma) << "\n";
    for (auto const& f : fillings) {
      std::cout << "\n" << render_ascii(f, color) << "read: " << to_string(reading_word(f))
                << "\n";
    }
    return exit_ok;
  }

  int cmd_psi(std::string const& path, std::string const& format) {
    json const in    = read_json(path);
    bool const color = color_enabled(stdout);
    std::string const kind = in.is_object() && in.contains("kind") && in["kind"].is_string()
                                 ? in["kind"].get<std::string>()
                                 : "";
    if (kind == "ssaf" || kind == "filling") {
      Filling const f = filling_from_json(in);
      Ssyt const    t = psi_inverse(f);
      if (want_json(format)) {
        emit({{"status", "ok"}, {"tableau", to_json(t)}});
      } else {
        std::cout << "psi_inverse: " << to_string(t) << "\n" << render_ascii(t);
      }
      return exit_ok;
    }
    Ssyt const    t = ssyt_from_json(in);
    Filling const f = psi(t);
    if (want_json(format)) {
      emit({{"status", "ok"}, {"filling", to_json(f)}, {"col_word", col_word(t)}});
    } else {
      std::cout << "col(T): " << to_string(col_word(t)) << "\n";
      show_filling("psi: ", f, color);
    }
    return exit_ok;
  }

  int cmd_rsk(std::string const& path, std::string const& format) {
    json const in    = read_json(path);
    bool const color = color_enabled(stdout);
    if (in.is_object() && in.contains("insertion") && in.contains("recording")) {
      Filling const      f = filling_from_json(in["insertion"]);
      Filling const      g = filling_from_json(in["recording"]);
      TwoLineArray const w = phi_inverse_array(f, g);
      NatMatrix const    a = array_to_matrix(w);
      if (want_json(format)) {
        emit({{"status", "ok"}, {"matrix", to_json(a)}, {"array", to_json(w)}});
      } else {
        std::cout << "top:    " << to_string(w.top) << "\n"
                  << "bottom: " << to_string(w.bottom) << "\n";
      }
      return exit_ok;
    }
    TwoLineArray const w
        = in.is_object() && in.contains("entries") ? matrix_to_array(matrix_from_json(in))
                                                   : array_from_json(in);
    FillingPair const fg = phi(w);
    if (want_json(format)) {
      emit({{"status", "ok"},
            {"array", to_json(w)},
            {"insertion", to_json(fg.insertion)},
            {"recording", to_json(fg.recording)}});
    } else {
      show_filling("F: ", fg.insertion, color);
      show_filling("G: ", fg.recording, color);
    }
    return exit_ok;
  }

  int cmd_insert(std::string const& path, int k, std::string const& format) {
    if (k < 1) {
      throw UsageError("--k must be positive");
    }
    Filling const f = filling_from_json(read_json(path));
    auto const    r = insert(f, k);
    if (want_json(format)) {
      emit({{"status", "ok"},
            {"filling", to_json(r.filling)},
            {"trace", to_json(r.trace)},
            {"trace_text", format_trace(r.trace)}});
    } else {
      std::cout << format_trace(r.trace) << "\n";
      show_filling("", r.filling, color_enabled(stdout));
    }
    return exit_ok;
  }

  int cmd_skyline(std::string const& path, std::string const& format) {
    Filling const f = filling_from_json(read_json(path));
    Filling const s = skyline::skyline(f);
    if (want_json(format)) {
      emit({{"status", "ok"}, {"filling", to_json(s)}});
    } else {
      show_filling("sk: ", s, color_enabled(stdout));
    }
    return exit_ok;
  }

  int cmd_verify(std::string const&  suite,
                 SuiteBounds const&  bounds,
                 bool                serial,
                 std::string const&  format) {
    SuiteReport report;
    try {
      report = run_suite(suite, bounds, serial ? Execution::serial : Execution::parallel);
    } catch (std::invalid_argument const& e) {
      throw UsageError(e.what());
    }
    if (want_json(format)) {
      emit(to_json(report));
    } else {
      std::cout << report.suite << ": " << (report.ok ? "ok" : "fail") << " ("
                << report.checked << " instances)\n";
      if (!report.ok) {
        std::cout << "counterexample: " << report.counterexample << "\n";
      }
    }
    return report.ok ? exit_ok : exit_fail;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-skyline augmented fillings: enumeration, bijections, verification"};
  app.require_subcommand(1);

  std::string format = "ascii";
  auto add_format    = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"ascii", "json"}));
  };

  std::string shape;
  auto*       enumerate = app.add_subcommand("enumerate", "List every SSAF of a shape");
  enumerate->add_option("--shape", shape, "Weak composition, e.g. 1,0,3,2")->required();
  add_format(enumerate);

  std::string path;
  auto*       psi_cmd = app.add_subcommand(
      "psi", "Apply psi to a tableau, or psi_inverse to a filling");
  psi_cmd->add_option("file", path, "JSON input ('-' for stdin)")->required();
  add_format(psi_cmd);

  auto* rsk = app.add_subcommand(
      "rsk", "Apply phi to a matrix or array, or its inverse to a filling pair");
  rsk->add_option("file", path, "JSON input ('-' for stdin)")->required();
  add_format(rsk);

  int   k          = 0;
  auto* insert_cmd = app.add_subcommand("insert", "Insert a letter into an SSAF");
  insert_cmd->add_option("file", path, "JSON filling ('-' for stdin)")->required();
  insert_cmd->add_option("--k", k, "Letter to insert")->required();
  add_format(insert_cmd);

  auto* sky = app.add_subcommand("skyline", "Standardize an SSAF");
  sky->add_option("file", path, "JSON filling ('-' for stdin)")->required();
  add_format(sky);

  std::string suite;
  SuiteBounds bounds;
  bool        serial = false;
  auto*       verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", bounds.max_n, "Size bound (cells or word length)");
  verify->add_option("--sum", bounds.sum, "Composition sum bound");
  verify->add_option("--width", bounds.width, "Width or alphabet bound");
  verify->add_option("--total", bounds.total, "Matrix total bound, or sample count");
  verify->add_option("--index", bounds.index, "Matrix index bound");
  verify->add_option("--seed", bounds.seed, "Seed for the random suite");
  verify->add_flag("--serial", serial, "Use the serial reference loop");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*enumerate) {
      return cmd_enumerate(shape, format);
    }
    if (*psi_cmd) {
      return cmd_psi(path, format);
    }
    if (*rsk) {
      return cmd_rsk(path, format);
    }
    if (*insert_cmd) {
      return cmd_insert(path, k, format);
    }
    if (*sky) {
      return cmd_skyline(path, format);
    }
    return cmd_verify(suite, bounds, serial, format);
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (std::invalid_argument const& e) {
    // validation failures are a command result, not a usage problem
    emit({{"status", "fail"}, {"reason", e.what()}});
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  } catch (std::exception const& e) {
    emit({{"status", "fail"}, {"reason", std::string("internal: ") + e.what()}});
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_fail;
  }
}
