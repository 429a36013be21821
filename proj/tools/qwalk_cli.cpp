// Command-line front end: reproducible runs of the walk simulator and the
// limit-law analysis, emitting CSV/JSON artifacts with fixed schemas.
//
// Exit codes: 0 success, 2 argument validation failure, 3 I/O failure.

#include <charconv>
#include <cmath>
#include <complex>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qwalk/diagnostics.hpp"
#include "qwalk/io.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/walk.hpp"

namespace {

using qwalk::Complex;
using ordered_json = nlohmann::ordered_json;

constexpr double kPi = 3.141592653589793;

struct ScheduleOpts {
  std::string kind = "fibonacci";
  double theta1 = kPi / 3.0;
  double theta2 = kPi / 6.0;
  std::string ordering = "older-first";
};

void add_schedule_options(CLI::App* cmd, ScheduleOpts& opts) {
  cmd->add_option("--schedule", opts.kind, "coin schedule kind")
      ->check(CLI::IsMember({"constant", "alternating", "fibonacci"}))
      ->capture_default_str();
  cmd->add_option("--theta1", opts.theta1, "first coin angle in radians, inside (0, pi/2)")
      ->capture_default_str();
  cmd->add_option("--theta2", opts.theta2,
                  "second coin angle in radians (alternating/fibonacci schedules)")
      ->capture_default_str();
  cmd->add_option("--ordering", opts.ordering, "fibonacci block concatenation order")
      ->check(CLI::IsMember({"older-first", "newer-first"}))
      ->capture_default_str();
}

qwalk::CoinAngle make_angle(double value, const char* flag) {
  try {
    return qwalk::CoinAngle(value);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(flag) + " must lie strictly inside (0, pi/2), got " +
                                qwalk::io::format_double(value));
  }
}

qwalk::CoinSchedule make_schedule(const ScheduleOpts& opts, std::size_t horizon) {
  const qwalk::CoinAngle theta1 = make_angle(opts.theta1, "--theta1");
  if (opts.kind == "constant") {
    return qwalk::CoinSchedule::constant(theta1, horizon);
  }
  const qwalk::CoinAngle theta2 = make_angle(opts.theta2, "--theta2");
  if (opts.kind == "alternating") {
    return qwalk::CoinSchedule::alternating(theta1, theta2, horizon);
  }
  const auto ordering = opts.ordering == "newer-first"
                            ? qwalk::FibonacciOrdering::newer_block_first
                            : qwalk::FibonacciOrdering::older_block_first;
  return qwalk::CoinSchedule::fibonacci(theta1, theta2, horizon, ordering);
}

double parse_real(std::string_view field) {
  double value = 0.0;
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("--initial has a malformed component '" + std::string(field) +
                                "'");
  }
  return value;
}

std::pair<Complex, Complex> parse_initial(const std::string& text) {
  std::vector<std::string_view> fields;
  std::string_view rest = text;
  while (true) {
    const std::size_t comma = rest.find(',');
    fields.push_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) {
      break;
    }
    rest = rest.substr(comma + 1);
  }
  if (fields.size() != 4) {
    throw std::invalid_argument("--initial expects four comma-separated reals re_a,im_a,re_b,im_b");
  }
  Complex alpha{parse_real(fields[0]), parse_real(fields[1])};
  Complex beta{parse_real(fields[2]), parse_real(fields[3])};
  const double norm = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-9) {
    throw std::invalid_argument("--initial must satisfy |alpha|^2 + |beta|^2 = 1 within 1e-9, got " +
                                qwalk::io::format_double(norm));
  }
  if (std::abs(norm - 1.0) > 1e-12) {
    const double scale = 1.0 / std::sqrt(norm);
    alpha *= scale;
    beta *= scale;
  }
  return {alpha, beta};
}

void require_steps(int steps) {
  if (steps < 1) {
    throw std::invalid_argument("--steps must be at least 1, got " + std::to_string(steps));
  }
}

void emit(const std::string& path, std::string_view content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) {
      throw qwalk::io::IoError("failed while writing to stdout");
    }
    return;
  }
  qwalk::io::write_file(path, content);
}

ordered_json config_json(const ScheduleOpts& schedule, Complex alpha, Complex beta, int steps) {
  ordered_json config;
  config["schedule"] = schedule.kind;
  config["theta1"] = schedule.theta1;
  config["theta2"] = schedule.theta2;
  config["ordering"] = schedule.ordering;
  config["initial"] = {alpha.real(), alpha.imag(), beta.real(), beta.imag()};
  config["steps"] = steps;
  return config;
}

std::string word_hash(const qwalk::CoinSchedule& schedule) {
  return "fnv1a64:" + qwalk::io::fnv1a64_hex(schedule.word());
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOpts {
  ScheduleOpts schedule;
  int steps = 0;
  std::string initial = "0.7071067811865476,0,0,0.7071067811865476";
  std::string engine = "position";
  int grid_size = 0;  // 0 = derive 2*steps + 2
  std::string format = "csv";
  std::string output = "-";
  bool checkpoints = true;
};

int run_simulate(const SimulateOpts& opts) {
  require_steps(opts.steps);
  const auto [alpha, beta] = parse_initial(opts.initial);
  const qwalk::CoinSchedule schedule =
      make_schedule(opts.schedule, static_cast<std::size_t>(opts.steps));

  std::vector<qwalk::PositionDistribution> snapshots;
  if (opts.engine == "fourier") {
    const int derived = 2 * opts.steps + 2;
    const int n_nodes = opts.grid_size > 0 ? opts.grid_size : derived;
    snapshots.push_back(
        qwalk::evolve_fourier(alpha, beta, schedule, opts.steps, qwalk::MomentumGrid(n_nodes)));
  } else {
    std::vector<int> times;
    if (opts.checkpoints) {
      times = qwalk::geometric_checkpoints(opts.steps);
    }
    if (times.empty() || times.back() != opts.steps) {
      times.push_back(opts.steps);
    }
    std::size_t next = 0;
    qwalk::evolve_observed(qwalk::initial_state(alpha, beta), schedule, opts.steps,
                           [&](const qwalk::WalkState& state) {
                             if (next < times.size() && state.time() == times[next]) {
                               snapshots.push_back(qwalk::distribution(state));
                               ++next;
                             }
                           });
  }

  std::string content;
  if (opts.format == "json") {
    ordered_json doc;
    doc["schema"] = "qwalk.simulate.v1";
    doc["config"] = config_json(opts.schedule, alpha, beta, opts.steps);
    doc["config"]["engine"] = opts.engine;
    doc["schedule_word_hash"] = word_hash(schedule);
    doc["snapshots"] = ordered_json::array();
    for (const auto& dist : snapshots) {
      ordered_json snap;
      snap["t"] = dist.time;
      auto sites = ordered_json::array();
      auto masses = ordered_json::array();
      for (const auto& [site, mass] : dist.masses) {
        sites.push_back(site);
        masses.push_back(mass);
      }
      snap["sites"] = std::move(sites);
      snap["probabilities"] = std::move(masses);
      doc["snapshots"].push_back(std::move(snap));
    }
    content = doc.dump(2) + "\n";
  } else {
    content = "t,n,probability\n";
    for (const auto& dist : snapshots) {
      for (const auto& [site, mass] : dist.masses) {
        content += std::to_string(dist.time);
        content += ',';
        content += std::to_string(site);
        content += ',';
        content += qwalk::io::format_double(mass);
        content += '\n';
      }
    }
  }
  emit(opts.output, content);
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumOpts {
  double theta = kPi / 4.0;
  int grid_size = 1024;
  std::string output = "-";
};

int run_spectrum(const SpectrumOpts& opts) {
  const qwalk::CoinAngle theta = make_angle(opts.theta, "--theta");
  const qwalk::SpectralData data = qwalk::eigensystem(qwalk::MomentumGrid(opts.grid_size), theta);
  std::string content = "k,w,lambda1_re,lambda1_im,lambda2_re,lambda2_im,h1,h2\n";
  for (const auto& point : data.points) {
    using qwalk::io::format_double;
    content += format_double(point.k);
    content += ',';
    content += format_double(point.w);
    content += ',';
    content += format_double(point.lambda1.real());
    content += ',';
    content += format_double(point.lambda1.imag());
    content += ',';
    content += format_double(point.lambda2.real());
    content += ',';
    content += format_double(point.lambda2.imag());
    content += ',';
    content += format_double(point.h1);
    content += ',';
    content += format_double(point.h2);
    content += '\n';
  }
  emit(opts.output, content);
  return 0;
}

// ---------------------------------------------------------------------------
// limit

struct LimitOpts {
  double a = 0.0;
  double c0 = 0.0;
  int r_max = 4;
  int samples = 201;
  std::string output = "-";
};

int run_limit(const LimitOpts& opts) {
  if (opts.r_max < 0) {
    throw std::invalid_argument("--r-max must be non-negative");
  }
  if (opts.samples < 2) {
    throw std::invalid_argument("--samples must be at least 2");
  }
  const qwalk::LimitDensity params(opts.a, opts.c0);
  using qwalk::io::format_double;
  std::string content = "kind,arg,value\n";
  const auto append_row = [&](const char* kind, double arg, double value) {
    content += kind;
    content += ',';
    content += format_double(arg);
    content += ',';
    content += format_double(value);
    content += '\n';
  };
  for (int i = 0; i < opts.samples; ++i) {
    const double x = -opts.a + 2.0 * opts.a * i / (opts.samples - 1);
    append_row("density", x, qwalk::weighted_density(x, params));
  }
  for (int i = 0; i < opts.samples; ++i) {
    const double x = -opts.a + 2.0 * opts.a * i / (opts.samples - 1);
    append_row("cdf", x, qwalk::cdf(x, params));
  }
  for (int r = 0; r <= opts.r_max; ++r) {
    append_row("moment", r, qwalk::moment(r, params));
  }
  emit(opts.output, content);
  return 0;
}

// ---------------------------------------------------------------------------
// compare

struct CompareOpts {
  ScheduleOpts schedule;
  int steps = 0;
  std::string initial = "0.7071067811865476,0,0,0.7071067811865476";
  double a = 0.0;
  bool a_given = false;
  int r_max = 4;
  std::string output = "-";
};

int run_compare(const CompareOpts& opts) {
  require_steps(opts.steps);
  if (opts.r_max < 1) {
    throw std::invalid_argument("--r-max must be at least 1");
  }
  const auto [alpha, beta] = parse_initial(opts.initial);
  const qwalk::CoinSchedule schedule =
      make_schedule(opts.schedule, static_cast<std::size_t>(opts.steps));
  const qwalk::PositionDistribution dist =
      qwalk::distribution(qwalk::evolve(qwalk::initial_state(alpha, beta), schedule, opts.steps));

  const double a = opts.a_given ? opts.a : std::cos(opts.schedule.theta1);
  const std::vector<double> empirical = qwalk::rescaled_moments(dist, opts.r_max);
  const double c0 = qwalk::c0_from_mean(empirical[0], a);
  const qwalk::LimitDensity params(a, c0);
  std::vector<double> limit;
  limit.reserve(static_cast<std::size_t>(opts.r_max));
  for (int r = 1; r <= opts.r_max; ++r) {
    limit.push_back(qwalk::moment(r, params));
  }

  ordered_json doc;
  doc["schema"] = "qwalk.compare.v1";
  doc["config"] = config_json(opts.schedule, alpha, beta, opts.steps);
  doc["config"]["support_parameter"] = a;
  doc["config"]["r_max"] = opts.r_max;
  doc["schedule_word_hash"] = word_hash(schedule);
  doc["time"] = opts.steps;
  doc["c0_fitted"] = c0;
  doc["moments_empirical"] = empirical;
  doc["moments_limit"] = limit;
  if (opts.r_max >= 2 && limit[1] != 0.0) {
    doc["second_moment_relative_error"] = std::abs(empirical[1] - limit[1]) / std::abs(limit[1]);
  }
  doc["ks_distance"] = qwalk::ks_distance(dist, params);
  doc["mass_outside_support"] = qwalk::mass_outside(dist, a);
  doc["mass_outside_support_padded"] = qwalk::mass_outside(dist, a + 0.05);
  emit(opts.output, doc.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// exponent

struct ExponentOpts {
  ScheduleOpts schedule;
  int steps = 0;
  std::string initial = "0.7071067811865476,0,0,0.7071067811865476";
  std::string output = "-";
  std::string fit_output;
};

int run_exponent(const ExponentOpts& opts) {
  require_steps(opts.steps);
  const std::vector<int> times = qwalk::geometric_checkpoints(opts.steps);
  if (times.size() < 2) {
    throw std::invalid_argument(
        "--steps must be at least 128 so the geometric 2^6..2^13 grid holds two sample times");
  }
  const auto [alpha, beta] = parse_initial(opts.initial);
  const qwalk::CoinSchedule schedule = make_schedule(opts.schedule, static_cast<std::size_t>(times.back()));
  const auto series =
      qwalk::sigma_series(schedule, qwalk::initial_state(alpha, beta), times);

  std::vector<std::pair<double, double>> samples;
  samples.reserve(series.size());
  std::string content = "t,sigma\n";
  for (const auto& [t, sigma] : series) {
    samples.emplace_back(static_cast<double>(t), sigma);
    content += std::to_string(t);
    content += ',';
    content += qwalk::io::format_double(sigma);
    content += '\n';
  }
  const qwalk::ScalingFit fit = qwalk::scaling_exponent(samples);

  ordered_json doc;
  doc["exponent"] = fit.exponent;
  doc["intercept"] = fit.intercept;
  doc["r_squared"] = fit.r_squared;
  const std::string fit_path =
      !opts.fit_output.empty() ? opts.fit_output
                               : (opts.output == "-" ? "-" : opts.output + ".fit.json");
  emit(opts.output, content);
  emit(fit_path, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-dimensional coined quantum walk simulator and analysis toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  SimulateOpts simulate;
  CLI::App* cmd_simulate = app.add_subcommand("simulate", "evolve a walk and emit distributions");
  add_schedule_options(cmd_simulate, simulate.schedule);
  cmd_simulate->add_option("--steps", simulate.steps, "number of steps")->required();
  cmd_simulate->add_option("--initial", simulate.initial, "re_a,im_a,re_b,im_b at the origin")
      ->capture_default_str();
  cmd_simulate->add_option("--engine", simulate.engine, "evolution engine")
      ->check(CLI::IsMember({"position", "fourier"}))
      ->capture_default_str();
  cmd_simulate->add_option("--grid-size", simulate.grid_size,
                           "momentum grid nodes for the fourier engine (default 2*steps+2)");
  cmd_simulate->add_option("--format", simulate.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd_simulate->add_option("--output", simulate.output, "output path, or - for stdout")
      ->capture_default_str();
  cmd_simulate->add_flag("--checkpoints,!--no-checkpoints", simulate.checkpoints,
                         "also emit snapshots on the geometric 2^6..2^13 time grid");
  cmd_simulate->callback([&]() { rc = run_simulate(simulate); });

  SpectrumOpts spectrum;
  CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "transfer-matrix spectrum on a grid");
  cmd_spectrum->add_option("--theta", spectrum.theta, "coin angle in radians")->required();
  cmd_spectrum->add_option("--grid-size", spectrum.grid_size, "momentum grid nodes")
      ->capture_default_str();
  cmd_spectrum->add_option("--output", spectrum.output, "output path, or - for stdout")
      ->capture_default_str();
  cmd_spectrum->callback([&]() { rc = run_spectrum(spectrum); });

  LimitOpts limit;
  CLI::App* cmd_limit = app.add_subcommand("limit", "sample the limit density, CDF and moments");
  cmd_limit->add_option("--a", limit.a, "support parameter in (0, 1)")->required();
  cmd_limit->add_option("--c0", limit.c0, "asymmetry coefficient, |c0| <= 1/a")
      ->capture_default_str();
  cmd_limit->add_option("--r-max", limit.r_max, "highest moment order")->capture_default_str();
  cmd_limit->add_option("--samples", limit.samples, "x-grid sample count")->capture_default_str();
  cmd_limit->add_option("--output", limit.output, "output path, or - for stdout")
      ->capture_default_str();
  cmd_limit->callback([&]() { rc = run_limit(limit); });

  CompareOpts compare;
  CLI::App* cmd_compare =
      app.add_subcommand("compare", "run a walk and compare against the limit law");
  add_schedule_options(cmd_compare, compare.schedule);
  cmd_compare->add_option("--steps", compare.steps, "number of steps")->required();
  cmd_compare->add_option("--initial", compare.initial, "re_a,im_a,re_b,im_b at the origin")
      ->capture_default_str();
  CLI::Option* a_option = cmd_compare->add_option(
      "--a", compare.a, "limit support parameter (default cos(theta1))");
  cmd_compare->add_option("--r-max", compare.r_max, "highest moment order")->capture_default_str();
  cmd_compare->add_option("--output", compare.output, "output path, or - for stdout")
      ->capture_default_str();
  cmd_compare->callback([&]() {
    compare.a_given = a_option->count() > 0;
    rc = run_compare(compare);
  });

  ExponentOpts exponent;
  CLI::App* cmd_exponent =
      app.add_subcommand("exponent", "fit the spreading exponent on the geometric time grid");
  add_schedule_options(cmd_exponent, exponent.schedule);
  cmd_exponent->add_option("--steps", exponent.steps, "largest sample time (>= 128)")->required();
  cmd_exponent->add_option("--initial", exponent.initial, "re_a,im_a,re_b,im_b at the origin")
      ->capture_default_str();
  cmd_exponent->add_option("--output", exponent.output, "sigma CSV path, or - for stdout")
      ->capture_default_str();
  cmd_exponent->add_option("--fit-output", exponent.fit_output,
                           "fit JSON path (default <output>.fit.json)");
  cmd_exponent->callback([&]() { rc = run_exponent(exponent); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::cerr << error.what() << "\n";
    return 2;
  } catch (const qwalk::io::IoError& error) {
    std::cerr << error.what() << "\n";
    return 3;
  } catch (const std::exception& error) {
    std::cerr << error.what() << "\n";
    return 2;
  }
  return rc;
}
