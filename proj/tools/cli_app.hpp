#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "fta/cli.hpp"
#include "fta/io.hpp"

namespace fta::cli {

/// Parses argv into a CliConfig and runs it. The mode is taken from --mode or
/// from a leading positional word (`fta solve "1 1i 3"`).
inline int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex polynomial roots by certified minimization and norm-decreasing descent", "fta"};
  CliConfig config;
  std::string mode_flag;
  std::string format = "json";
  std::string corner;
  std::string input;

  app.add_option("--mode", mode_flag, "solve | solve-all | evt | bounds | check");
  app.add_option("--tol", config.tol, "residual tolerance")->capture_default_str();
  app.add_option("--max-iter", config.max_iter, "descent iteration cap")->capture_default_str();
  app.add_option("--epsilon", config.epsilon, "target gap for evt mode")->capture_default_str();
  app.add_option("--budget", config.budget, "cell budget for evt mode")->capture_default_str();
  app.add_flag("--trace", config.trace, "emit the descent trace");
  app.add_option("--corner", corner, "evt region lower-left corner as re,im");
  app.add_option("--side", config.side, "evt region side length");
  app.add_option("--format", format, "json | csv")->capture_default_str();
  app.add_option("--seed", config.seed, "random seed for check mode")->capture_default_str();
  app.add_option("--samples", config.check_samples, "samples per lemma in check mode")->capture_default_str();
  app.add_option("--input", input, "read the polynomial from FILE");
  // Two scalar slots rather than a vector: CLI11 would split a JSON list.
  std::string first, second;
  app.add_option("mode-or-polynomial", first, "MODE word or POLYNOMIAL");
  app.add_option("polynomial", second, "POLYNOMIAL when a MODE word comes first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  auto fail = [&err](const std::string& msg) {
    err << "error: " << msg << '\n';
    return kExitError;
  };

  std::optional<Mode> mode;
  if (!mode_flag.empty()) {
    mode = parse_mode(mode_flag);
    if (!mode) return fail("unknown mode '" + mode_flag + "'");
  }
  std::vector<std::string> positional;
  for (auto* opt : {app.get_option("mode-or-polynomial"), app.get_option("polynomial")}) {
    if (opt->count() > 0) positional.push_back(opt->as<std::string>());
  }
  if (!positional.empty() && !mode) {
    if (auto m = parse_mode(positional.front())) {
      mode = m;
      positional.erase(positional.begin());
    }
  }
  config.mode = mode.value_or(Mode::Solve);
  if (positional.size() > 1) return fail("expected a single inline polynomial (quote it)");
  if (!positional.empty()) config.inline_polynomial = positional.front();
  if (!input.empty()) config.input_file = input;

  if (format == "json") {
    config.format = Format::Json;
  } else if (format == "csv") {
    config.format = Format::Csv;
  } else {
    return fail("unknown format '" + format + "'");
  }

  if (!corner.empty()) {
    const auto comma = corner.find(',');
    if (comma == std::string::npos) return fail("--corner expects re,im");
    const auto re = io::parse_complex(corner.substr(0, comma));
    const auto im = io::parse_complex(corner.substr(comma + 1));
    if (!re || !im || re->im != 0.0 || im->im != 0.0) return fail("--corner expects re,im");
    config.corner = Complex{re->re, im->re};
  }

  return run(config, out, err);
}

}  // namespace fta::cli
