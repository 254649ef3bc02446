#include "succoef/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <CLI11.hpp>

#include "succoef/bounds.hpp"
#include "succoef/errors.hpp"
#include "succoef/tolerances.hpp"

namespace succoef::cli {

namespace {

using report::Blank;
using report::Cell;
using report::Table;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s, std::string_view whole) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("cannot parse number: '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

GridSize parse_grid(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("--grid expects C,R,T");
  std::array<int, 3> n{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [ptr, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), n[i]);
    if (ec != std::errc{} || ptr != parts[i].data() + parts[i].size() || n[i] < 2) {
      throw std::invalid_argument("--grid sizes must be integers >= 2");
    }
  }
  return {n[0], n[1], n[2]};
}

bool is_ozaki(const ClassParams& p) { return p.family == Family::ozaki_g; }

const std::vector<std::string> param_columns{"family", "alpha", "gamma", "gamma_input", "lambda"};

std::vector<std::string> with_params(std::initializer_list<std::string> rest) {
  std::vector<std::string> cols = param_columns;
  cols.insert(cols.end(), rest);
  return cols;
}

std::vector<Cell> param_cells(const ClassParams& p, const std::string& gamma_text) {
  if (is_ozaki(p)) return {std::string(to_string(p.family)), Blank{}, Blank{}, Blank{}, p.lambda};
  return {std::string(to_string(p.family)), p.alpha, p.gamma, gamma_text, Blank{}};
}

std::vector<Cell> concat(std::vector<Cell> head, std::initializer_list<Cell> tail) {
  head.insert(head.end(), tail);
  return head;
}

Cell optional_real(std::optional<double> v) { return v ? Cell{*v} : Cell{Blank{}}; }

}  // namespace

double parse_real(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty number");
  double sign = 1.0;
  if (text.front() == '+' || text.front() == '-') {
    if (text.front() == '-') sign = -1.0;
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = trim(text.substr(0, slash));
    den = trim(text.substr(slash + 1));
    if (den.empty()) throw std::invalid_argument("missing denominator: '" + std::string(whole) + "'");
  }
  double value = 0.0;
  if (num.size() >= 2 && num.substr(num.size() - 2) == "pi") {
    std::string_view coeff = trim(num.substr(0, num.size() - 2));
    if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
    value = (coeff.empty() ? 1.0 : parse_number(coeff, whole)) * std::numbers::pi;
  } else {
    value = parse_number(num, whole);
  }
  if (!den.empty()) {
    const double d = parse_number(den, whole);
    if (d == 0.0) throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
    value /= d;
  }
  return sign * value;
}

std::vector<LatticeValue> parse_lattice(std::string_view text) {
  text = trim(text);
  std::vector<LatticeValue> out;
  if (text.empty()) return out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("lattice range expects start:stop:count");
    const double start = parse_real(parts[0]);
    const double stop = parse_real(parts[1]);
    int count = 0;
    const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
    if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size() || count < 0) {
      throw std::invalid_argument("lattice count must be a non-negative integer");
    }
    for (int i = 0; i < count; ++i) {
      const double v = count == 1 ? start : start + (stop - start) * i / (count - 1);
      out.push_back({report::format_real(v), v});
    }
    return out;
  }
  for (auto token : split(text, ',')) out.push_back({std::string(token), parse_real(token)});
  return out;
}

ClassParams class_params(std::string_view family, double alpha, double gamma, double lambda) {
  if (family == "spirallike") return ClassParams::spirallike(alpha, gamma);
  if (family == "convex") return ClassParams::convex(alpha, gamma);
  if (family == "ozaki") return ClassParams::ozaki(lambda);
  throw domain_error("unknown family: " + std::string(family));
}

ClassParams class_params(const RunConfig& config) {
  return class_params(config.family, parse_real(config.alpha), parse_real(config.gamma), parse_real(config.lambda));
}

CommandResult cmd_bounds(const RunConfig& config) {
  const ClassParams p = class_params(config);
  Table table(with_params({"functional", "lower", "upper", "lower_extremal", "upper_extremal"}));
  for (const Functional which : {Functional::d1, Functional::d2}) {
    const BoundInterval b = bound(p, which);
    table.add_row(concat(param_cells(p, config.gamma),
                         {std::string(to_string(which)), b.lower, b.upper,
                          std::string(to_string(b.lower_extremal.name)),
                          std::string(to_string(b.upper_extremal.name))}));
  }
  return {std::move(table), true};
}

CommandResult cmd_verify(const RunConfig& config) {
  const ClassParams p = class_params(config);
  Table table(with_params({"check", "functional", "target", "value", "residual", "tolerance", "pass", "c", "r",
                           "theta"}));
  bool all = true;
  auto add = [&](std::string check, Functional which, Cell target, double value, Cell residual, double tolerance,
                 bool pass, Cell c = Blank{}, Cell r = Blank{}, Cell theta = Blank{}) {
    all = all && pass;
    table.add_row(concat(param_cells(p, config.gamma), {std::move(check), std::string(to_string(which)),
                                                        std::move(target), value, std::move(residual), tolerance,
                                                        pass, std::move(c), std::move(r), std::move(theta)}));
  };

  for (const Functional which : {Functional::d1, Functional::d2}) {
    const VerifyReport rep = grid_optimize({p, which}, config.grid, config.tol);
    add("numeric_max", which, rep.analytic.upper, rep.numeric_max, rep.residual_max, rep.tolerance,
        rep.residual_max <= rep.tolerance, rep.argmax.c, rep.argmax.r, rep.argmax.theta);
    add("numeric_min", which, rep.analytic.lower, rep.numeric_min, rep.residual_min, rep.tolerance,
        rep.residual_min <= rep.tolerance, rep.argmin.c, rep.argmin.r, rep.argmin.theta);
  }

  for (const auto& desc : catalog(p)) {
    for (const Functional which : {Functional::d1, Functional::d2}) {
      const auto target = target_endpoint(desc, which);
      if (!target) continue;
      const double value = attainment(desc, which, std::max<std::size_t>(config.order, 4));
      const double residual = std::abs(value - *target);
      add("attain:" + std::string(to_string(desc.name)), which, *target, value, residual, tol::attainment,
          residual <= tol::attainment);
    }
  }

  const CaseBoundaryReport cb = case_boundary_check({p, Functional::d2}, config.grid);
  for (const auto& m : cb.minorants) {
    add("monotone:" + m.label, Functional::d2, 0.0, m.worst_step, Blank{}, tol::monotone, m.passed, Blank{});
  }
  add("argmin_c", Functional::d2, cb.analytic_argmin_c, cb.numeric_argmin_c,
      std::abs(cb.numeric_argmin_c - cb.analytic_argmin_c), cb.c_resolution, cb.argmin_passed, cb.numeric_argmin_c);
  return {std::move(table), all};
}

CommandResult cmd_sweep(const RunConfig& config) {
  Table table(with_params({"d1_lower", "d1_upper", "d1_numeric_min", "d1_numeric_max", "d1_residual", "d2_lower",
                           "d2_upper", "d2_numeric_min", "d2_numeric_max", "d2_residual_min", "d2_residual_max",
                           "pass", "error"}));
  const bool ozaki = config.family == "ozaki";
  if (!ozaki && config.family != "spirallike" && config.family != "convex") {
    throw domain_error("unknown family: " + config.family);
  }

  auto lattice_or_single = [](const std::string& lattice, const std::string& single) {
    return lattice.empty() ? std::vector<LatticeValue>{{single, parse_real(single)}} : parse_lattice(lattice);
  };
  auto sorted = [](std::vector<LatticeValue> v) {
    std::stable_sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.value < r.value; });
    return v;
  };

  std::vector<std::pair<LatticeValue, LatticeValue>> points;  // (alpha or lambda, gamma)
  if (ozaki) {
    for (auto& l : sorted(lattice_or_single(config.lambdas, config.lambda))) points.push_back({l, {"", 0.0}});
  } else {
    const auto alphas = sorted(lattice_or_single(config.alphas, config.alpha));
    const auto gammas = sorted(lattice_or_single(config.gammas, config.gamma));
    for (const auto& a : alphas) {
      for (const auto& g : gammas) points.push_back({a, g});
    }
  }

  bool all = true;
  for (const auto& [first, gamma] : points) {
    const std::vector<Cell> head =
        ozaki ? std::vector<Cell>{config.family, Blank{}, Blank{}, Blank{}, first.value}
              : std::vector<Cell>{config.family, first.value, gamma.value, gamma.text, Blank{}};
    try {
      const ClassParams p = ozaki ? class_params(config.family, 0.0, 0.0, first.value)
                                  : class_params(config.family, first.value, gamma.value, 1.0);
      const VerifyReport d1 = grid_optimize({p, Functional::d1}, config.grid, config.tol);
      const VerifyReport d2 = grid_optimize({p, Functional::d2}, config.grid, config.tol);
      const bool pass = d1.passed && d2.passed;
      all = all && pass;
      table.add_row(concat(head, {d1.analytic.lower, d1.analytic.upper, d1.numeric_min, d1.numeric_max,
                                  std::max(d1.residual_min, d1.residual_max), d2.analytic.lower, d2.analytic.upper,
                                  d2.numeric_min, d2.numeric_max, d2.residual_min, d2.residual_max, pass,
                                  std::string{}}));
    } catch (const std::exception& e) {
      all = false;
      table.add_row(concat(head, {Blank{}, Blank{}, Blank{}, Blank{}, Blank{}, Blank{}, Blank{}, Blank{}, Blank{},
                                  Blank{}, Blank{}, false, std::string(e.what())}));
    }
  }
  return {std::move(table), all};
}

CommandResult cmd_extremal(const RunConfig& config) {
  const ClassParams p = class_params(config);
  if (config.order < 4) throw domain_error("--order must be at least 4");
  Table table(with_params({"extremal", "a2_re", "a2_im", "a3_re", "a3_im", "d1", "d2", "functional", "target",
                           "residual", "pass", "error"}));
  bool all = true;
  for (const auto& desc : catalog(p)) {
    for (const Functional which : {Functional::d1, Functional::d2}) {
      const auto target = target_endpoint(desc, which);
      if (!target) continue;
      try {
        const TruncatedSeries f = extremal_series(desc, config.order);
        const double value = functional_of(f, which);
        const double residual = std::abs(value - *target);
        const bool pass = residual <= tol::attainment;
        all = all && pass;
        table.add_row(concat(param_cells(p, config.gamma),
                             {std::string(to_string(desc.name)), f[2].real(), f[2].imag(), f[3].real(), f[3].imag(),
                              functional_of(f, Functional::d1), functional_of(f, Functional::d2),
                              std::string(to_string(which)), *target, residual, pass, std::string{}}));
      } catch (const std::exception& e) {
        all = false;
        table.add_row(concat(param_cells(p, config.gamma),
                             {std::string(to_string(desc.name)), Blank{}, Blank{}, Blank{}, Blank{}, Blank{},
                              Blank{}, std::string(to_string(which)), optional_real(target), Blank{}, false,
                              std::string(e.what())}));
      }
    }
  }
  return {std::move(table), all};
}

CommandResult cmd_sample(const RunConfig& config) {
  const ClassParams p = class_params(config);
  if (config.order < 4) throw domain_error("--order must be at least 4");
  if (config.samples < 1 || config.atoms < 1) throw domain_error("--samples and --atoms must be positive");
  const SampleReport rep = sample_no_violation(p, config.samples, config.atoms, config.seed, config.order);
  Table table(with_params({"functional", "lower", "upper", "min_value", "min_sample", "max_value", "max_sample",
                           "violations", "samples", "failures", "pass"}));
  for (const auto& [stats, which] : {std::pair{&rep.d1, Functional::d1}, std::pair{&rep.d2, Functional::d2}}) {
    const bool pass = stats->violations == 0 && rep.construction_failures == 0;
    table.add_row(concat(param_cells(p, config.gamma),
                         {std::string(to_string(which)), stats->analytic.lower, stats->analytic.upper,
                          stats->lowest.value, std::int64_t{stats->lowest.sample}, stats->highest.value,
                          std::int64_t{stats->highest.sample}, std::int64_t{stats->violations},
                          std::int64_t{rep.n_samples}, std::int64_t{rep.construction_failures}, pass}));
  }
  return {std::move(table), rep.passed()};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Successive coefficient bounds for spirallike, gamma-convex and Ozaki-class functions"};
  app.set_config("--config", "", "flat key=value configuration file (flags override it)");
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig config;
  std::string grid_text = "201,101,256";
  std::string format_text = "table";
  app.add_option("--family", config.family, "spirallike | convex | ozaki")
      ->check(CLI::IsMember({"spirallike", "convex", "ozaki"}));
  app.add_option("--alpha", config.alpha, "order alpha in [0, 1)");
  app.add_option("--gamma", config.gamma, "angle gamma in (-pi/2, pi/2); accepts forms like pi/4");
  app.add_option("--lambda", config.lambda, "Ozaki parameter lambda in (0, 1]");
  app.add_option("--order", config.order, "truncation order (>= 4)");
  app.add_option("--grid", grid_text, "optimizer grid C,R,T");
  app.add_option("--tol", config.tol, "residual tolerance for numeric endpoints");
  app.add_option("--seed", config.seed, "random seed for sampling");
  app.add_option("--samples", config.samples, "number of random class members (sample)");
  app.add_option("--atoms", config.atoms, "maximum atoms per random representation (sample)");
  app.add_option("--alphas", config.alphas, "sweep lattice for alpha: start:stop:count or a,b,c");
  app.add_option("--gammas", config.gammas, "sweep lattice for gamma: start:stop:count or a,b,c");
  app.add_option("--lambdas", config.lambdas, "sweep lattice for lambda: start:stop:count or a,b,c");
  app.add_option("--out", config.out, "output path (default stdout)");
  app.add_option("--format", format_text, "csv | json | table")->check(CLI::IsMember({"csv", "json", "table"}));

  for (const char* name : {"bounds", "verify", "sweep", "extremal", "sample"}) {
    app.add_subcommand(name, "")->callback([&config, name] { config.command = name; });
  }
  app.get_subcommand("bounds")->description("analytic sharp intervals and extremal names");
  app.get_subcommand("verify")->description("re-derive the sharp constants numerically");
  app.get_subcommand("sweep")->description("verify over a parameter lattice");
  app.get_subcommand("extremal")->description("coefficients and attainment of the extremal functions");
  app.get_subcommand("sample")->description("random class members against the bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  CommandResult result{Table(std::vector<std::string>{})};
  try {
    config.grid = parse_grid(grid_text);
    config.format = report::parse_format(format_text);
    if (config.order < 4) throw domain_error("--order must be at least 4");
    const auto t0 = std::chrono::steady_clock::now();
    if (config.command == "bounds") result = cmd_bounds(config);
    else if (config.command == "verify") result = cmd_verify(config);
    else if (config.command == "sweep") result = cmd_sweep(config);
    else if (config.command == "extremal") result = cmd_extremal(config);
    else result = cmd_sample(config);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f", secs);
    err << config.command << ": " << result.table.rows().size() << " rows, "
        << (result.passed ? "pass" : "FAIL") << " (" << timing << " s)\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  if (config.out.empty()) {
    report::write(out, result.table, config.format);
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.out << '\n';
      return exit_usage;
    }
    report::write(file, result.table, config.format);
  }
  return result.passed ? exit_pass : exit_failure;
}

}  // namespace succoef::cli
