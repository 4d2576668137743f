#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wass1d/wass1d.h"

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kScope = 3, kUnknownSuite = 4 };

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(w1d_status s) {
  switch (s) {
    case W1D_OK: return kOk;
    case W1D_SCOPE_MISMATCH:
    case W1D_DOMAIN_MISMATCH:
    case W1D_INVALID_INTERVAL_ISOMETRY:
      return kScope;
    case W1D_UNKNOWN_SUITE: return kUnknownSuite;
    default: return kBadInput;
  }
}

void check(w1d_status s) {
  if (s != W1D_OK) throw CliError{exit_code_for(s), w1d_last_error()};
}

struct MeasureDeleter {
  void operator()(w1d_measure* m) const { w1d_measure_free(m); }
};
struct IsometryDeleter {
  void operator()(w1d_isometry* m) const { w1d_isometry_free(m); }
};
struct StringDeleter {
  void operator()(char* s) const { w1d_string_free(s); }
};
using MeasurePtr = std::unique_ptr<w1d_measure, MeasureDeleter>;
using IsometryPtr = std::unique_ptr<w1d_isometry, IsometryDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kBadInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MeasurePtr load_measure(const std::string& path) {
  w1d_measure* m = nullptr;
  check(w1d_measure_from_json(read_file(path).c_str(), &m));
  return MeasurePtr(m);
}

// Takes ownership of `text` once the producing call has returned.
void print_owned(w1d_status s, char*& text) {
  StringPtr owned(text);
  text = nullptr;
  check(s);
  std::cout << owned.get() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on one-dimensional Wasserstein spaces"};
  app.require_subcommand(1);

  std::string file_a, file_b;
  double p = 1.0;
  auto* dist = app.add_subcommand("dist", "Wasserstein distance between two measure files");
  dist->add_option("a", file_a, "first measure JSON")->required();
  dist->add_option("b", file_b, "second measure JSON")->required();
  dist->add_option("--p", p, "exponent p >= 1");

  std::string iso_file, measure_file;
  auto* apply = app.add_subcommand("apply", "Apply an isometry descriptor to a measure");
  apply->add_option("iso", iso_file, "isometry descriptor JSON")->required();
  apply->add_option("measure", measure_file, "measure JSON")->required();

  std::string suite, out_path;
  int trials = 0;
  std::uint64_t seed = 7;
  auto* verify = app.add_subcommand("verify", "Run a claim-verification suite");
  verify->add_option("suite", suite, "suite id")->required();
  verify->add_option("--trials", trials, "number of trials (default: suite default)");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--out", out_path, "write the CSV report here instead of stdout");

  app.add_subcommand("suites", "List the registered suites");

  std::string kind;
  int n = 0;
  double t = 0.5, x = 0.0, sigma = 1.0, shape = 0.0;
  auto* generate = app.add_subcommand("generate", "Print a JSON list of measures");
  generate->add_option("kind", kind, "qn | mn-random | slice-extremal | two-point")
      ->required()
      ->check(CLI::IsMember({"qn", "mn-random", "slice-extremal", "two-point"}));
  generate->add_option("--n", n, "ladder level");
  generate->add_option("--t", t, "slice value in [0,1]");
  generate->add_option("--x", x, "two-point centre");
  generate->add_option("--sigma", sigma, "two-point spread");
  generate->add_option("--p", shape, "two-point shape parameter");
  generate->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*dist) {
      MeasurePtr a = load_measure(file_a);
      MeasurePtr b = load_measure(file_b);
      double d = 0.0;
      check(w1d_distance(a.get(), b.get(), p, &d));
      std::printf("%#.15g\n", d);
    } else if (*apply) {
      w1d_isometry* raw = nullptr;
      check(w1d_isometry_from_json(read_file(iso_file).c_str(), &raw));
      IsometryPtr iso(raw);
      MeasurePtr mu = load_measure(measure_file);
      w1d_measure* image = nullptr;
      check(w1d_apply(iso.get(), mu.get(), &image));
      MeasurePtr owned(image);
      char* text = nullptr;
      const w1d_status s = w1d_measure_to_json(owned.get(), &text);
      print_owned(s, text);
    } else if (*verify) {
      char* csv = nullptr;
      char* summary = nullptr;
      int passed = 0;
      check(w1d_verify(suite.c_str(), trials, seed, &csv, &summary, &passed));
      StringPtr csv_owned(csv), summary_owned(summary);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << csv;
        if (!out) throw CliError{kBadInput, "cannot write " + out_path};
      }
      std::cout << summary << (passed ? "PASS" : "FAIL") << " " << suite << "\n";
      return passed ? kOk : kFailed;
    } else if (app.got_subcommand("suites")) {
      for (size_t i = 0; i < w1d_suite_count(); ++i) std::cout << w1d_suite_id(i) << "\n";
    } else if (*generate) {
      char* text = nullptr;
      w1d_status s = W1D_OK;
      if (kind == "qn") {
        s = w1d_generate_qn(n, &text);
      } else if (kind == "mn-random") {
        s = w1d_generate_mn_random(n, seed, &text);
      } else if (kind == "slice-extremal") {
        s = w1d_generate_slice_extremal(t, &text);
      } else {
        s = w1d_generate_two_point(x, sigma, shape, &text);
      }
      print_owned(s, text);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kOk;
}
