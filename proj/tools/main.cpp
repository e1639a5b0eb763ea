// ar1band: banded-precision toolkit for irregularly sampled stationary
// AR(1) processes. Subcommands: precision, simulate, condsim, logpdf, bench.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ar1band/banded.hpp"
#include "ar1band/dense.hpp"
#include "ar1band/density.hpp"
#include "ar1band/precision.hpp"
#include "ar1band/rng.hpp"
#include "ar1band/sampling.hpp"
#include "ar1band/serialize.hpp"
#include "text_io.hpp"

namespace {

using namespace ar1band;
using tools::fmt_double;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw tools::IoError("cannot write file '" + out_path + "'");
  }
  out << text;
  if (!out) {
    throw tools::IoError("error writing file '" + out_path + "'");
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  std::random_device rd;
  const std::uint64_t seed =
      (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  // Report the seed so any run can be reproduced after the fact.
  std::cerr << "seed: " << seed << "\n";
  return seed;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         const std::string& format) {
  std::ostringstream out;
  if (format == "md") {
    out << "|";
    for (const auto& h : header) out << " " << h << " |";
    out << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& row : rows) {
      out << "|";
      for (const auto& cell : row) out << " " << (cell.empty() ? "-" : cell)
                                       << " |";
      out << "\n";
    }
  } else {
    for (std::size_t i = 0; i < header.size(); ++i) {
      out << header[i] << (i + 1 < header.size() ? "," : "\n");
    }
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << row[i] << (i + 1 < row.size() ? "," : "\n");
      }
    }
  }
  return out.str();
}

// --- precision ---------------------------------------------------------

int run_precision(double rho, double sigma, const std::string& times_arg,
                  const std::string& format, const std::string& out_path) {
  const Ar1Params params(rho, sigma);
  const TimeGrid grid(tools::parse_times(times_arg));
  const TridiagSym q = build_precision(params, grid);

  if (format == "json") {
    write_output(to_json(q) + "\n", out_path);
    return 0;
  }

  // CSV of the upper-triangular nonzeros, 1-based indices.
  std::ostringstream out;
  out << "i,j,value\n";
  for (std::size_t i = 0; i < q.dim(); ++i) {
    out << (i + 1) << "," << (i + 1) << "," << fmt_double(q.diag()[i]) << "\n";
    if (i + 1 < q.dim()) {
      out << (i + 1) << "," << (i + 2) << "," << fmt_double(q.offdiag()[i])
          << "\n";
    }
  }
  write_output(out.str(), out_path);
  return 0;
}

// --- simulate -----------------------------------------------------------

int run_simulate(double rho, double sigma, const std::string& times_arg,
                 const std::string& mean_arg,
                 const std::optional<std::uint64_t>& seed_flag,
                 std::int64_t draws, const std::string& out_path) {
  if (draws < 1) {
    throw ValidationError("draws must be >= 1");
  }
  const Ar1Params params(rho, sigma);
  const TimeGrid grid(tools::parse_times(times_arg));
  const std::size_t m = grid.size();
  const std::vector<double> mu =
      tools::parse_mean(mean_arg).align(grid.times());

  // Factor once; each draw is one O(m) solve.
  const TridiagSym q = build_precision(params, grid);
  const BandLowerBi l = band_cholesky(q);

  StdNormalSource rng(resolve_seed(seed_flag));
  const std::size_t n = static_cast<std::size_t>(draws);
  std::vector<std::vector<double>> draws_out(n);
  for (std::size_t j = 0; j < n; ++j) {
    draws_out[j] = back_substitute(l, rng.draw(m));
    for (std::size_t i = 0; i < m; ++i) draws_out[j][i] += mu[i];
  }

  std::ostringstream out;
  out << "time";
  for (std::size_t j = 0; j < n; ++j) out << ",draw_" << (j + 1);
  out << "\n";
  for (std::size_t i = 0; i < m; ++i) {
    out << grid[i];
    for (std::size_t j = 0; j < n; ++j) {
      out << "," << fmt_double(draws_out[j][i]);
    }
    out << "\n";
  }
  write_output(out.str(), out_path);
  return 0;
}

// --- condsim ------------------------------------------------------------

int run_condsim(double rho, double sigma, const std::string& obs_file,
                const std::string& pred_times_arg, const std::string& mean_arg,
                const std::optional<std::uint64_t>& seed_flag,
                std::int64_t draws, bool summary, std::size_t dense_cap,
                const std::string& out_path) {
  if (draws < 1) {
    throw ValidationError("draws must be >= 1");
  }
  const Ar1Params params(rho, sigma);

  const auto obs = tools::parse_obs_csv(obs_file);
  std::vector<std::int64_t> obs_times;
  std::vector<double> obs_values;
  obs_times.reserve(obs.size());
  for (const auto& [t, v] : obs) {
    obs_times.push_back(t);
    obs_values.push_back(v);
  }
  const TimeGrid grid_o(std::move(obs_times));
  const TimeGrid grid_p(tools::parse_times(pred_times_arg));

  const tools::MeanArg mean = tools::parse_mean(mean_arg);
  const MeanSpec mean_o{mean.align(grid_o.times())};
  const MeanSpec mean_p{mean.align(grid_p.times())};

  const ConditionalProblem problem(params, grid_o, grid_p, mean_o, mean_p,
                                   obs_values);
  const ConditionalSampler sampler(problem, dense_cap);

  StdNormalSource rng(resolve_seed(seed_flag));
  const std::size_t n = static_cast<std::size_t>(draws);
  const std::size_t k = grid_p.size();
  std::vector<std::vector<double>> draws_out(n);
  for (std::size_t j = 0; j < n; ++j) {
    draws_out[j] = sampler.draw(rng);
  }

  std::ostringstream out;
  if (summary) {
    out << "time,mean,p2.5,p97.5\n";
    std::vector<double> column(n);
    for (std::size_t i = 0; i < k; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        column[j] = draws_out[j][i];
        acc += column[j];
      }
      out << grid_p[i] << "," << fmt_double(acc / static_cast<double>(n))
          << "," << fmt_double(tools::quantile(column, 0.025)) << ","
          << fmt_double(tools::quantile(column, 0.975)) << "\n";
    }
  } else {
    out << "time";
    for (std::size_t j = 0; j < n; ++j) out << ",draw_" << (j + 1);
    out << "\n";
    for (std::size_t i = 0; i < k; ++i) {
      out << grid_p[i];
      for (std::size_t j = 0; j < n; ++j) {
        out << "," << fmt_double(draws_out[j][i]);
      }
      out << "\n";
    }
  }
  write_output(out.str(), out_path);
  return 0;
}

// --- logpdf -------------------------------------------------------------

int run_logpdf(double rho, double sigma, const std::string& times_arg,
               const std::string& x_arg, const std::string& mean_arg,
               const std::string& out_path) {
  const Ar1Params params(rho, sigma);
  const TimeGrid grid(tools::parse_times(times_arg));
  const std::vector<double> x = tools::parse_reals(x_arg);
  const MeanSpec mean{tools::parse_mean(mean_arg).align(grid.times())};

  const double value = log_density(params, grid, mean, x);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g\n", value);
  write_output(buf, out_path);
  return 0;
}

// --- bench --------------------------------------------------------------

double g_bench_sink = 0.0;

template <typename F>
double time_median_s(F&& fn) {
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < 3; ++i) fn();  // warmup
  std::array<double, 5> samples{};
  for (double& s : samples) {
    const auto t0 = clock::now();
    fn();
    const auto t1 = clock::now();
    s = std::chrono::duration<double>(t1 - t0).count();
  }
  std::sort(samples.begin(), samples.end());
  return samples[2];
}

TimeGrid bench_grid(std::size_t m) {
  // Deterministic varied gaps; complexity depends only on m.
  static constexpr std::array<std::int64_t, 5> gaps = {1, 2, 3, 5, 8};
  std::vector<std::int64_t> times(m);
  std::int64_t t = 0;
  for (std::size_t i = 0; i < m; ++i) {
    times[i] = t;
    t += gaps[i % gaps.size()];
  }
  return TimeGrid(std::move(times));
}

std::string fmt_time(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", seconds);
  return buf;
}

int run_bench(const std::string& sizes_arg, std::size_t dense_cap,
              const std::string& format, const std::string& out_path) {
  std::vector<std::size_t> sizes;
  for (double v : tools::parse_reals(sizes_arg)) {
    if (!(v >= 1.0)) {
      throw ValidationError("sizes must be >= 1");
    }
    sizes.push_back(static_cast<std::size_t>(v + 0.5));
  }

  const std::vector<std::string> header = {
      "m",        "build_s",        "chol_s",        "logpdf_s",
      "sample_s", "sparse_total_s", "dense_logpdf_s", "loglog_slope"};
  std::vector<std::vector<std::string>> rows;

  std::vector<double> log_m, log_t;  // completed rows, for the slope fit
  for (std::size_t m : sizes) {
    std::vector<std::string> row(header.size());
    row[0] = std::to_string(m);
    try {
      const Ar1Params params(0.7, 1.0);
      const TimeGrid grid = bench_grid(m);
      const MeanSpec mean(0.0);
      const std::vector<double> x(m, 0.0);

      const double build_s = time_median_s([&] {
        g_bench_sink += build_precision(params, grid).diag()[0];
      });
      const TridiagSym q = build_precision(params, grid);
      const double chol_s = time_median_s([&] {
        g_bench_sink += band_cholesky(q).diag()[0];
      });
      const double logpdf_s = time_median_s([&] {
        g_bench_sink += log_density(params, grid, mean, x);
      });
      StdNormalSource rng(12345);
      const double sample_s = time_median_s([&] {
        g_bench_sink += sample_unconditional(params, grid, mean, rng)[0];
      });
      const double sparse_total = build_s + chol_s + logpdf_s + sample_s;

      row[1] = fmt_time(build_s);
      row[2] = fmt_time(chol_s);
      row[3] = fmt_time(logpdf_s);
      row[4] = fmt_time(sample_s);
      row[5] = fmt_time(sparse_total);

      if (m <= dense_cap) {
        std::vector<double> mu(m, 0.0);
        const double dense_s = time_median_s([&] {
          const DenseMat cov = build_covariance(params, grid, dense_cap);
          g_bench_sink += dense_log_pdf(mu, cov, x);
        });
        row[6] = fmt_time(dense_s);
      }

      log_m.push_back(std::log(static_cast<double>(m)));
      log_t.push_back(std::log(sparse_total));
      if (log_m.size() >= 2) {
        // Least-squares slope of log time against log m so far.
        const std::size_t n = log_m.size();
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          mx += log_m[i];
          my += log_t[i];
        }
        mx /= static_cast<double>(n);
        my /= static_cast<double>(n);
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          sxy += (log_m[i] - mx) * (log_t[i] - my);
          sxx += (log_m[i] - mx) * (log_m[i] - mx);
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", sxy / sxx);
        row[7] = buf;
      }
    } catch (const std::bad_alloc&) {
      for (std::size_t i = 1; i < row.size(); ++i) row[i] = "skipped";
    } catch (const std::length_error&) {
      for (std::size_t i = 1; i < row.size(); ++i) row[i] = "skipped";
    }
    rows.push_back(std::move(row));
  }

  write_output(render_table(header, rows, format), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sparse-precision simulation, imputation and density evaluation for "
      "irregularly sampled stationary AR(1) processes"};
  app.require_subcommand(1);

  double rho = 0.0;
  double sigma = 1.0;
  std::string times_arg, mean_arg = "0", x_arg, obs_file, pred_times_arg;
  std::string format_precision = "json", format_bench = "md";
  std::string out_path;
  std::optional<std::uint64_t> seed_flag;
  std::int64_t draws = 1;
  bool summary = false;
  std::string sizes_arg;
  std::size_t dense_cap = 2000;
  std::size_t condsim_cap = kDenseCapDefault;

  auto* precision =
      app.add_subcommand("precision", "Export the tridiagonal precision matrix");
  precision->add_option("--rho", rho, "AR(1) correlation, |rho| < 1")
      ->required();
  precision->add_option("--sigma", sigma, "innovation standard deviation")->capture_default_str();
  precision
      ->add_option("--times", times_arg,
                   "sample times: comma list, a:b range, or @file")
      ->required();
  precision->add_option("--format", format_precision, "output format")->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  precision->add_option("--out", out_path, "output file (default stdout)");

  auto* simulate =
      app.add_subcommand("simulate", "Draw unconditional samples as CSV");
  simulate->add_option("--rho", rho, "AR(1) correlation, |rho| < 1")
      ->required();
  simulate->add_option("--sigma", sigma, "innovation standard deviation")->capture_default_str();
  simulate
      ->add_option("--times", times_arg,
                   "sample times: comma list, a:b range, or @file")
      ->required();
  simulate->add_option("--mean", mean_arg,
                       "constant mean or @file (CSV time,mean)")->capture_default_str();
  simulate->add_option("--seed", seed_flag, "64-bit seed (default: entropy)");
  simulate->add_option("--draws", draws, "number of draws")->capture_default_str();
  simulate->add_option("--out", out_path, "output file (default stdout)");

  auto* condsim = app.add_subcommand(
      "condsim", "Draw from the process conditional on observations");
  condsim->add_option("--rho", rho, "AR(1) correlation, |rho| < 1")->required();
  condsim->add_option("--sigma", sigma, "innovation standard deviation")->capture_default_str();
  condsim
      ->add_option("--obs-file", obs_file, "observations CSV (header time,value)")
      ->required();
  condsim
      ->add_option("--pred-times", pred_times_arg,
                   "prediction times: comma list, a:b range, or @file")
      ->required();
  condsim->add_option("--mean", mean_arg,
                      "constant mean or @file (CSV time,mean)")->capture_default_str();
  condsim->add_option("--seed", seed_flag, "64-bit seed (default: entropy)");
  condsim->add_option("--draws", draws, "number of draws")->capture_default_str();
  condsim->add_flag("--summary", summary,
                    "emit per-time mean and 2.5/97.5 percentiles");
  condsim->add_option("--dense-cap", condsim_cap,
                      "cap on the dense cross-covariance block")->capture_default_str();
  condsim->add_option("--out", out_path, "output file (default stdout)");

  auto* logpdf = app.add_subcommand("logpdf", "Evaluate the log-density");
  logpdf->add_option("--rho", rho, "AR(1) correlation, |rho| < 1")->required();
  logpdf->add_option("--sigma", sigma, "innovation standard deviation")->capture_default_str();
  logpdf
      ->add_option("--times", times_arg,
                   "sample times: comma list, a:b range, or @file")
      ->required();
  logpdf->add_option("--x", x_arg, "observed values: comma list or @file")
      ->required();
  logpdf->add_option("--mean", mean_arg,
                     "constant mean or @file (CSV time,mean)")->capture_default_str();
  logpdf->add_option("--out", out_path, "output file (default stdout)");

  auto* bench = app.add_subcommand(
      "bench", "Time the sparse pipeline against the dense baseline");
  bench->add_option("--sizes", sizes_arg, "comma list of sizes, e.g. 1e3,1e4")
      ->required();
  bench->add_option("--dense-cap", dense_cap,
                    "largest size for the dense baseline")->capture_default_str();
  bench->add_option("--format", format_bench, "output format")->capture_default_str()
      ->check(CLI::IsMember({"csv", "md"}));
  bench->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (precision->parsed()) {
      return run_precision(rho, sigma, times_arg, format_precision, out_path);
    }
    if (simulate->parsed()) {
      return run_simulate(rho, sigma, times_arg, mean_arg, seed_flag, draws,
                          out_path);
    }
    if (condsim->parsed()) {
      return run_condsim(rho, sigma, obs_file, pred_times_arg, mean_arg,
                         seed_flag, draws, summary, condsim_cap, out_path);
    }
    if (logpdf->parsed()) {
      return run_logpdf(rho, sigma, times_arg, x_arg, mean_arg, out_path);
    }
    if (bench->parsed()) {
      return run_bench(sizes_arg, dense_cap, format_bench, out_path);
    }
  } catch (const tools::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotPositiveDefiniteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
