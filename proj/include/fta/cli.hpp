#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fta/complex.hpp"
#include "fta/descent.hpp"
#include "fta/error.hpp"
#include "fta/evt_grid.hpp"
#include "fta/growth_bounds.hpp"
#include "fta/io.hpp"
#include "fta/lemmas.hpp"
#include "fta/polynomial.hpp"
#include "fta/solver.hpp"

namespace fta::cli {

enum class Mode { Solve, SolveAll, Evt, Bounds, Check };
enum class Format { Json, Csv };

inline std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "solve") return Mode::Solve;
  if (s == "solve-all") return Mode::SolveAll;
  if (s == "evt") return Mode::Evt;
  if (s == "bounds") return Mode::Bounds;
  if (s == "check") return Mode::Check;
  return std::nullopt;
}

inline constexpr std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Solve: return "solve";
    case Mode::SolveAll: return "solve-all";
    case Mode::Evt: return "evt";
    case Mode::Bounds: return "bounds";
    case Mode::Check: return "check";
  }
  return "";
}

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotConverged = 2;

inline constexpr std::string_view kTraceHeader = "iter,re,im,residual,s,k";

struct CliConfig {
  Mode mode = Mode::Solve;
  double tol = 1e-10;
  std::size_t max_iter = 10000;
  double epsilon = 1e-6;
  std::size_t budget = 1000000;
  bool trace = false;
  std::optional<std::string> input_file;
  std::optional<std::string> inline_polynomial;
  Format format = Format::Json;
  std::optional<Complex> corner;
  std::optional<double> side;
  std::uint64_t seed = kDefaultCheckSeed;
  std::size_t check_samples = 1000;
};

/// Checks the invariants the argument parser cannot express.
inline void validate(const CliConfig& c) {
  if (!(c.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "--tol must be > 0");
  if (!(c.epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "--epsilon must be > 0");
  if (c.input_file.has_value() == c.inline_polynomial.has_value())
    throw Error(ErrorKind::InvalidArgument, "give exactly one of --input FILE or an inline polynomial");
  if (c.mode == Mode::Evt && (!c.corner || !c.side))
    throw Error(ErrorKind::InvalidArgument, "evt mode requires --corner re,im and --side s");
}

inline Polynomial load_polynomial(const CliConfig& c) {
  if (c.inline_polynomial) return io::parse_polynomial(*c.inline_polynomial);
  std::ifstream in(*c.input_file);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read input file " + *c.input_file);
  std::ostringstream text;
  text << in.rdbuf();
  return io::parse_polynomial(text.str());
}

namespace detail {

inline void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace) {
  for (const TraceRow& r : trace) {
    out << r.iter << ',' << io::format_real(r.z.re) << ',' << io::format_real(r.z.im) << ','
        << io::format_real(r.residual) << ',' << io::format_real(r.s) << ',' << r.k << '\n';
  }
}

inline void write_trace_json(io::JsonWriter& w, const std::vector<TraceRow>& trace) {
  w.key("trace").begin_array();
  for (const TraceRow& r : trace) {
    w.begin_object()
        .field("iter", r.iter)
        .field("re", r.z.re)
        .field("im", r.z.im)
        .field("residual", r.residual)
        .field("s", r.s)
        .field("k", r.k)
        .end_object();
  }
  w.end_array();
}

inline void write_root_fields(io::JsonWriter& w, const RootResult& r, bool trace) {
  w.field("root", r.root)
      .field("residual", r.residual)
      .field("iterations", r.iterations)
      .field("converged", r.converged)
      .field("stalled", r.stalled);
  if (trace) write_trace_json(w, r.trace);
}

inline void write_certificate_fields(io::JsonWriter& w, const GrowthCertificate& c) {
  w.field("threshold_radius", c.threshold_radius)
      .field("enclosure_radius", c.enclosure_radius)
      .field("lead_norm", c.lead_norm)
      .field("sub_max", c.sub_max)
      .field("deg", c.deg);
}

inline void write_minimum_fields(io::JsonWriter& w, const CertifiedMinimum& m) {
  w.field("argmin", m.argmin)
      .field("value", m.value)
      .field("gap", m.gap)
      .field("evaluations", m.evaluations)
      .field("cells", m.cells)
      .field("budget_exhausted", m.budget_exhausted);
}

inline void write_region(io::JsonWriter& w, const SquareRegion& sq) {
  w.begin_object().field("corner", sq.corner()).field("side", sq.side()).end_object();
}

inline int run_solve(const CliConfig& c, const Polynomial& p, std::ostream& out) {
  const SolveReport report = c.mode == Mode::Solve ? solve_one(p, c.tol, c.max_iter)
                                                   : find_all_roots(p, c.tol, c.max_iter);
  const bool ok = report.converged();
  if (c.format == Format::Csv) {
    if (c.trace) {
      out << kTraceHeader << '\n';
      for (const RootResult& r : report.roots) write_trace_csv(out, r.trace);
    } else {
      out << "re,im,residual,iterations,converged\n";
      for (const RootResult& r : report.roots)
        out << io::format_real(r.root.re) << ',' << io::format_real(r.root.im) << ','
            << io::format_real(r.residual) << ',' << r.iterations << ','
            << (r.converged ? "true" : "false") << '\n';
    }
    return ok ? kExitOk : kExitNotConverged;
  }

  io::JsonWriter w;
  w.begin_object().field("mode", to_string(c.mode)).field("polynomial", truncate(p));
  if (c.mode == Mode::Solve) {
    write_root_fields(w, report.roots.front(), c.trace);
  } else {
    w.key("roots").begin_array();
    for (const RootResult& r : report.roots) {
      w.begin_object();
      write_root_fields(w, r, c.trace);
      w.end_object();
    }
    w.end_array().field("reconstruction_error", report.reconstruction_error).field("converged", ok);
  }
  w.key("enclosure").begin_object();
  write_certificate_fields(w, report.enclosure);
  w.end_object().key("seed").begin_object();
  write_minimum_fields(w, report.seed);
  w.end_object().end_object();
  out << w.str() << '\n';
  return ok ? kExitOk : kExitNotConverged;
}

inline int run_evt(const CliConfig& c, const Polynomial& p, std::ostream& out) {
  const SquareRegion region(*c.corner, *c.side);
  const CertifiedMinimum m = certified_min(p, region, c.epsilon, c.budget);
  if (c.format == Format::Csv) {
    out << "re,im,value,gap,evaluations,cells,budget_exhausted\n"
        << io::format_real(m.argmin.re) << ',' << io::format_real(m.argmin.im) << ','
        << io::format_real(m.value) << ',' << io::format_real(m.gap) << ',' << m.evaluations << ','
        << m.cells << ',' << (m.budget_exhausted ? "true" : "false") << '\n';
  } else {
    io::JsonWriter w;
    w.begin_object().field("mode", "evt").key("region");
    write_region(w, region);
    write_minimum_fields(w, m);
    w.end_object();
    out << w.str() << '\n';
  }
  return m.budget_exhausted ? kExitNotConverged : kExitOk;
}

inline int run_bounds(const CliConfig& c, const Polynomial& p, std::ostream& out) {
  const GrowthCertificate cert = growth_certificate(p);
  if (c.format == Format::Csv) {
    out << "threshold_radius,enclosure_radius,lead_norm,sub_max,deg\n"
        << io::format_real(cert.threshold_radius) << ',' << io::format_real(cert.enclosure_radius)
        << ',' << io::format_real(cert.lead_norm) << ',' << io::format_real(cert.sub_max) << ','
        << cert.deg << '\n';
  } else {
    io::JsonWriter w;
    w.begin_object().field("mode", "bounds");
    write_certificate_fields(w, cert);
    w.key("square");
    write_region(w, minimum_enclosing_square(p));
    w.end_object();
    out << w.str() << '\n';
  }
  return kExitOk;
}

inline int run_check(const CliConfig& c, const Polynomial& p, std::ostream& out, std::ostream& err) {
  const std::vector<LemmaResult> results = check_lemmas(p, c.check_samples, c.seed);
  bool all = true;
  for (const LemmaResult& r : results) all = all && r.passed();
  if (c.format == Format::Csv) {
    out << "lemma,passed,samples,failures,worst_margin\n";
    for (const LemmaResult& r : results)
      out << r.name << ',' << (r.passed() ? "true" : "false") << ',' << r.samples << ',' << r.failures
          << ',' << io::format_real(r.worst_margin) << '\n';
  } else {
    io::JsonWriter w;
    w.begin_object()
        .field("mode", "check")
        .field("seed", static_cast<std::size_t>(c.seed))
        .field("samples", c.check_samples)
        .field("passed", all)
        .key("lemmas")
        .begin_array();
    for (const LemmaResult& r : results) {
      w.begin_object()
          .field("name", r.name)
          .field("passed", r.passed())
          .field("samples", r.samples)
          .field("failures", r.failures)
          .field("worst_margin", r.worst_margin)
          .end_object();
    }
    w.end_array().end_object();
    out << w.str() << '\n';
  }
  for (const LemmaResult& r : results)
    if (!r.passed()) err << "error: lemma " << r.name << " failed on " << r.failures << " samples\n";
  return all ? kExitOk : kExitError;
}

}  // namespace detail

/// Executes one command. Library errors become exit 1 with a one-line
/// diagnostic on `err`.
inline int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const Polynomial p = load_polynomial(config);
    switch (config.mode) {
      case Mode::Solve:
      case Mode::SolveAll: return detail::run_solve(config, p, out);
      case Mode::Evt: return detail::run_evt(config, p, out);
      case Mode::Bounds: return detail::run_bounds(config, p, out);
      case Mode::Check: return detail::run_check(config, p, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace fta::cli
