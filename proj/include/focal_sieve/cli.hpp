#pragma once

// Subcommands of the focal-sieve tool. Exit codes: 0 success, 1 property
// failure or sieve mismatch, 2 usage error, 3 I/O error.

#include "focal_sieve/integer.hpp"
#include "focal_sieve/plane.hpp"
#include "focal_sieve/render.hpp"
#include "focal_sieve/serialize.hpp"
#include "focal_sieve/sieve.hpp"
#include "focal_sieve/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace focal_sieve::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kIo = 3 };

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline SieveContext context_or_usage(Int p) {
  try {
    return SieveContext(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

/// "x0,y0,x1,y1" with integer or n/d entries.
inline Window parse_window(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      v.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw UsageError("bad window coordinate '" + item + "'");
    }
  }
  if (v.size() != 4) throw UsageError("window must be x0,y0,x1,y1");
  return Window{v[0], v[1], v[2], v[3]};
}

struct SieveArgs {
  Int p = 0;
  std::string method = "geometric";
  std::string format = "text";
};

inline int cmd_sieve(const SieveArgs& args, std::ostream& out, std::ostream& err) {
  const SieveContext ctx = context_or_usage(args.p);
  const bool both = args.method == "both";
  const SieveMethod primary = args.method == "classic" ? SieveMethod::classic : SieveMethod::geometric;
  const SieveResult result = run_sieve(ctx, primary);
  std::optional<bool> match;
  if (both) match = result.primes == run_sieve(ctx, SieveMethod::classic).primes;
  const char* verdict = match.value_or(true) ? "MATCH" : "MISMATCH";

  if (args.format == "json") {
    auto j = sieve_json(result, args.method);
    if (match) j["verdict"] = verdict;
    out << j.dump() << '\n';
  } else if (args.format == "csv") {
    for (Int n : result.primes) out << n << '\n';
    if (match) err << "verdict: " << verdict << '\n';
  } else {
    out << "p = " << ctx.p() << ", method = " << args.method << '\n';
    out << "primes in (" << ctx.p() << ", " << ctx.p_squared() << "): " << result.primes.size() << '\n';
    for (std::size_t i = 0; i < result.primes.size(); ++i) out << (i ? " " : "") << result.primes[i];
    out << '\n';
    if (match) out << "verdict: " << verdict << '\n';
  }
  return match.value_or(true) ? kOk : kFailure;
}

inline nlohmann::json report_json(const VerifyReport& report) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& pr : report.properties)
    props.push_back({{"name", pr.name}, {"checkedCases", pr.checked_cases}, {"failures", pr.failures}});
  return {{"pRange", {report.p_lo, report.p_hi}},
          {"properties", props},
          {"elapsedMs", report.elapsed.count()},
          {"ok", report.ok()}};
}

struct VerifyArgs {
  Int p_max = 0;
  std::vector<std::string> properties;
};

inline int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream&) {
  if (args.p_max < 2) throw UsageError("--p-max must be >= 2");
  std::vector<Property> props;
  for (const auto& name : args.properties) {
    const auto prop = parse_property(name);
    if (!prop) throw UsageError("unknown property '" + name + "'");
    if (std::find(props.begin(), props.end(), *prop) == props.end()) props.push_back(*prop);
  }
  if (props.empty()) props = all_properties();
  const VerifyReport report = run_verify(args.p_max, props, sweep_threads());
  out << report_json(report).dump(2) << '\n';
  return report.ok() ? kOk : kFailure;
}

struct FigureArgs {
  Int p = 0;
  std::string which;
  std::string out_path;
  int width = 800;
  int height = 800;
  std::string window;
  int max_lines = 3;
  double stroke_width = 1.0;
  std::string palette_path;
};

inline Palette load_palette(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read palette file " + path);
  Palette pal;
  try {
    nlohmann::json::parse(in).get_to(pal);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad palette file " + path + ": " + e.what());
  }
  return pal;
}

inline int cmd_figure(const FigureArgs& args, std::ostream& out, std::ostream&) {
  const SieveContext ctx = context_or_usage(args.p);
  RenderOptions opts;
  opts.width_px = args.width;
  opts.height_px = args.height;
  opts.max_lines_per_family = args.max_lines;
  opts.stroke_width = args.stroke_width;
  if (!args.palette_path.empty()) opts.palette = load_palette(args.palette_path);

  std::string svg;
  try {
    if (args.which == "sieve") {
      svg = render_sieve(ctx, opts);
    } else if (args.which == "detail") {
      const Window window = args.window.empty()
                                ? Window{Rational(0), Rational(-5), Rational(ctx.p() + 1), Rational(0)}
                                : parse_window(args.window);
      opts.window = window;
      svg = render_detail(ctx, window, opts);
    } else if (args.which == "quotients") {
      svg = render_quotient_distribution(ctx, opts);
    } else {
      svg = render_quotient_remainder(ctx, opts);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::ofstream file(args.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + args.out_path + " for writing");
  file << svg;
  file.close();
  if (!file) throw IoError("failed writing " + args.out_path);

  out << args.out_path << ": " << count_elements(svg, "point") << " points, " << count_elements(svg, "extreme")
      << " extremes, " << count_elements(svg, "focal-line") << " focal lines\n";
  return kOk;
}

struct BenchArgs {
  Int p_max = 0;
  std::string format = "text";
};

inline int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream&) {
  if (args.p_max < 2) throw UsageError("--p-max must be >= 2");
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  nlohmann::json rows = nlohmann::json::array();
  for (Int p : primes_classic(1, args.p_max + 1)) {
    const SieveContext ctx(p);
    auto t0 = clock::now();
    const auto geometric = run_sieve(ctx, SieveMethod::geometric);
    auto t1 = clock::now();
    const auto classic = run_sieve(ctx, SieveMethod::classic);
    auto t2 = clock::now();
    rows.push_back({{"p", p}, {"geomMs", ms(t1 - t0)}, {"classicMs", ms(t2 - t1)}});
  }
  if (args.format == "json") {
    out << nlohmann::json{{"rows", rows}}.dump() << '\n';
    return kOk;
  }
  out << "p\tgeomMs\tclassicMs\n";
  for (const auto& row : rows)
    out << row["p"].get<Int>() << '\t' << row["geomMs"].get<double>() << '\t' << row["classicMs"].get<double>()
        << '\n';
  return kOk;
}

/// Parses args (program name excluded) and runs the selected subcommand.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric sieve of Eratosthenes: sieve, verify, figure, bench", "focal-sieve"};
  app.require_subcommand(1);

  SieveArgs sieve;
  auto* sieve_cmd = app.add_subcommand("sieve", "primes in (p, p^2) from focal-line lattice hits");
  sieve_cmd->add_option("--p", sieve.p, "prime p")->required();
  sieve_cmd->add_option("--method", sieve.method)->check(CLI::IsMember({"geometric", "classic", "both"}));
  sieve_cmd->add_option("--format", sieve.format)->check(CLI::IsMember({"text", "json", "csv"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check properties over all primes <= p-max");
  verify_cmd->add_option("--p-max", verify.p_max)->required();
  verify_cmd->add_option("--properties", verify.properties, "comma-separated property names")->delimiter(',');

  FigureArgs figure;
  auto* figure_cmd = app.add_subcommand("figure", "write an SVG figure");
  figure_cmd->add_option("--p", figure.p)->required();
  figure_cmd->add_option("--which", figure.which)->required()->check(
      CLI::IsMember({"sieve", "detail", "quotients", "qr"}));
  figure_cmd->add_option("--out", figure.out_path)->required();
  figure_cmd->add_option("--width", figure.width);
  figure_cmd->add_option("--height", figure.height);
  figure_cmd->add_option("--window", figure.window, "x0,y0,x1,y1 in plane coordinates (detail only)");
  figure_cmd->add_option("--max-lines", figure.max_lines, "focal lines drawn per a (k <= max)");
  figure_cmd->add_option("--stroke-width", figure.stroke_width);
  figure_cmd->add_option("--palette", figure.palette_path, "JSON palette file");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "time geometric vs classic sieve per prime");
  bench_cmd->add_option("--p-max", bench.p_max)->required();
  bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember({"text", "json"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*sieve_cmd) return cmd_sieve(sieve, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*figure_cmd) return cmd_figure(figure, out, err);
    return cmd_bench(bench, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace focal_sieve::cli
