// Copyright 2026 The prbench Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prbench/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "prbench/cdp.hpp"
#include "prbench/diagnostics.hpp"
#include "prbench/errors.hpp"
#include "prbench/init.hpp"
#include "prbench/loo.hpp"
#include "prbench/parallel.hpp"
#include "prbench/pgm.hpp"
#include "prbench/rng.hpp"

namespace prbench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::ofstream open_output(const std::string& path) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path + ": cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError(path + ": write failed");
}

const char* flag(bool b) { return b ? "true" : "false"; }

double median(std::vector<double> values) {
  if (values.empty()) return kNaN;
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size() / 2;
  if (values.size() % 2 == 1) return values[k];
  return 0.5 * (values[k - 1] + values[k]);
}

IterationTrace run_instance(const ExperimentConfig& cfg, long n, long m,
                            std::uint64_t seed, Method method) {
  const Problem p = make_problem(n, m, seed);
  const Vector x0 = initial_point(p, cfg.init, seed);
  return run(p.ens, p.obs, x0, params_for(cfg, n, x0.norm(), method), p.gt, cfg.ric);
}

Vector probe_vector(Index n, std::uint64_t seed) {
  CounterStream stream(seed, streams::kProbe);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = stream.normal();
  return v / v.norm();
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Problem make_problem(Index n, Index m, std::uint64_t seed) {
  SensingEnsemble ens = sample_ensemble(m, n, seed);
  GroundTruth gt(sample_unit_sphere(n, seed));
  Observations obs = observe(ens, gt);
  return Problem{std::move(ens), std::move(gt), std::move(obs)};
}

Vector initial_point(const Problem& problem, InitMode mode, std::uint64_t seed) {
  if (mode == InitMode::kRandom) return random_init(problem.ens.n(), seed, 1.0);
  return spectral_init(problem.ens, problem.obs).x0;
}

SolverParams params_for(const ExperimentConfig& cfg, Index n, double norm_x0,
                        Method method) {
  SolverParams p = default_params(n, norm_x0, method, cfg.schedule);
  if (cfg.eta) p.eta = *cfg.eta;
  if (cfg.beta && method != Method::kGradientDescent) p.beta = *cfg.beta;
  p.tol = cfg.tol;
  p.max_iters = cfg.max_iters;
  p.validate();
  return p;
}

void write_trace_csv(std::ostream& out, const IterationTrace& trace) {
  out << "iter,dist,cost,grad_norm,max_incoherence,loc_ok,inc_ok,paired_norm,"
         "contraction_ratio\n";
  for (const auto& r : trace.records) {
    out << r.iter << ',' << format_double(r.dist) << ',' << format_double(r.cost) << ','
        << format_double(r.grad_norm) << ',' << format_double(r.max_incoherence) << ','
        << (r.loc_ok ? 1 : 0) << ',' << (r.inc_ok ? 1 : 0) << ','
        << format_double(r.paired_norm) << ',' << format_double(r.contraction_ratio)
        << '\n';
  }
  out << "# status=" << to_string(trace.status) << '\n';
}

std::optional<double> headtohead_slope(const IterationTrace& a, const IterationTrace& b,
                                       double lo, double hi) {
  const std::size_t count = std::min(a.records.size(), b.records.size());
  std::vector<double> xs, ys;
  for (std::size_t t = 0; t < count; ++t) {
    const double da = a.records[t].dist, db = b.records[t].dist;
    if (da >= lo && da <= hi && db >= lo && db <= hi) {
      xs.push_back(std::log(da));
      ys.push_back(std::log(db));
    }
  }
  if (xs.size() < 2) return std::nullopt;
  const double k = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) return std::nullopt;
  return sxy / sxx;
}

double iterations_to_tol(const IterationTrace& trace) {
  if (trace.status != Status::kConverged || trace.records.empty()) return kInf;
  return static_cast<double>(trace.records.back().iter);
}

std::vector<SlopeRow> compute_slopes(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.methods.size() < 2) {
    throw DomainError("slopes: need two methods (reference, accelerated)");
  }
  std::vector<SlopeRow> rows;
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    SlopeRow row;
    row.n = cfg.n_list[i];
    row.m = cfg.m_for(i);
    row.sqrt_log_n = std::sqrt(std::log(static_cast<double>(row.n)));
    std::vector<std::optional<double>> per_seed(cfg.seed_list.size());
    parallel_for(cfg.seed_list.size(), [&](std::size_t k) {
      const std::uint64_t seed = cfg.seed_list[k];
      try {
        const auto a = run_instance(cfg, row.n, row.m, seed, cfg.methods[0]);
        const auto b = run_instance(cfg, row.n, row.m, seed, cfg.methods[1]);
        if (a.status == Status::kConverged && b.status == Status::kConverged) {
          per_seed[k] = headtohead_slope(a, b, cfg.tol, cfg.fit_upper);
        }
      } catch (const ConvergenceError&) {
      } catch (const DegenerateSpectrumError&) {
      }
    });
    double sum = 0.0;
    for (const auto& s : per_seed) {
      if (s) {
        sum += *s;
        ++row.slopes_used;
      }
    }
    row.mean_slope = row.slopes_used > 0 ? sum / row.slopes_used : kNaN;
    row.within_band = std::isfinite(row.mean_slope) &&
                      std::abs(row.mean_slope / row.sqrt_log_n - 1.0) <= 0.3;
    rows.push_back(row);
  }
  return rows;
}

SweepResult run_sweep(const ExperimentConfig& cfg,
                      const std::optional<std::string>& trace_dir) {
  cfg.validate();
  const std::vector<long> m_values =
      cfg.m_list.empty() ? std::vector<long>{} : cfg.m_list;
  struct Job {
    long n, m;
    std::size_t method_index;
    std::size_t seed_index;
  };
  std::vector<std::pair<long, long>> grid;
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    if (m_values.empty()) {
      grid.emplace_back(cfg.n_list[i], default_m(cfg.n_list[i]));
    } else {
      for (long m : m_values) grid.emplace_back(cfg.n_list[i], m);
    }
  }
  std::vector<Job> jobs;
  for (const auto& [n, m] : grid) {
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
      for (std::size_t si = 0; si < cfg.seed_list.size(); ++si) {
        jobs.push_back({n, m, mi, si});
      }
    }
  }
  struct Outcome {
    double iterations = kInf;
    bool diverged = false;
    bool failed = false;
  };
  std::vector<Outcome> outcomes(jobs.size());
  if (trace_dir) std::filesystem::create_directories(*trace_dir);
  parallel_for(jobs.size(), [&](std::size_t j) {
    const Job& job = jobs[j];
    const Method method = cfg.methods[job.method_index];
    const std::uint64_t seed = cfg.seed_list[job.seed_index];
    try {
      const IterationTrace trace = run_instance(cfg, job.n, job.m, seed, method);
      outcomes[j].iterations = iterations_to_tol(trace);
      outcomes[j].diverged = trace.status == Status::kDiverged;
      if (trace_dir) {
        const std::string path = *trace_dir + "/n" + std::to_string(job.n) + "_m" +
                                 std::to_string(job.m) + "_" +
                                 std::string(to_string(method)) + "_s" +
                                 std::to_string(seed) + ".csv";
        std::ofstream out = open_output(path);
        write_trace_csv(out, trace);
        finish(out, path);
      }
    } catch (const ConvergenceError&) {
      outcomes[j].failed = true;
    } catch (const DegenerateSpectrumError&) {
      outcomes[j].failed = true;
    }
  });

  SweepResult result;
  std::size_t j = 0;
  for (const auto& [n, m] : grid) {
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
      SweepCell cell;
      cell.n = n;
      cell.m = m;
      cell.method = cfg.methods[mi];
      for (std::size_t si = 0; si < cfg.seed_list.size(); ++si, ++j) {
        cell.iterations.push_back(outcomes[j].iterations);
        cell.diverged += outcomes[j].diverged ? 1 : 0;
        cell.failed += outcomes[j].failed ? 1 : 0;
      }
      cell.median = median(cell.iterations);
      result.cells.push_back(std::move(cell));
    }
  }
  auto find = [&](long n, long m, Method method) -> const SweepCell* {
    for (const auto& c : result.cells) {
      if (c.n == n && c.m == m && c.method == method) return &c;
    }
    return nullptr;
  };
  for (const auto& [n, m] : grid) {
    const SweepCell* gd = find(n, m, Method::kGradientDescent);
    const SweepCell* hb = find(n, m, Method::kPolyak);
    const SweepCell* nag = find(n, m, Method::kNesterov);
    if (!gd || !hb || !nag) continue;
    DominanceRow row;
    row.n = n;
    row.m = m;
    row.gd_converges = std::isfinite(gd->median);
    row.polyak_faster = hb->median < gd->median;
    row.nesterov_faster = nag->median < gd->median;
    row.momentum_agree = std::isfinite(hb->median) && std::isfinite(nag->median) &&
                         std::abs(hb->median - nag->median) <=
                             0.1 * std::max(hb->median, nag->median);
    result.dominance.push_back(row);
  }
  return result;
}

int cmd_run(const ExperimentConfig& cfg) {
  cfg.validate();
  const IterationTrace trace = run_instance(cfg, cfg.n_list.front(), cfg.m_for(0),
                                            cfg.seed_list.front(), cfg.methods.front());
  std::ofstream out = open_output(cfg.output);
  write_trace_csv(out, trace);
  finish(out, cfg.output);
  return 0;
}

int cmd_headtohead(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.methods.size() < 2) {
    throw DomainError("headtohead: need two methods (reference, accelerated)");
  }
  const long n = cfg.n_list.front();
  const long m = cfg.m_for(0);
  std::ofstream out = open_output(cfg.output);
  out << "# reference=" << to_string(cfg.methods[0])
      << " accelerated=" << to_string(cfg.methods[1]) << " n=" << n << " m=" << m
      << '\n';
  bool all_ok = true;
  for (const std::uint64_t seed : cfg.seed_list) {
    const auto a = run_instance(cfg, n, m, seed, cfg.methods[0]);
    const auto b = run_instance(cfg, n, m, seed, cfg.methods[1]);
    out << "# seed=" << seed << " status_reference=" << to_string(a.status)
        << " status_accelerated=" << to_string(b.status) << '\n';
    out << "seed,iter,log_dist_reference,log_dist_accelerated\n";
    const std::size_t count = std::min(a.records.size(), b.records.size());
    for (std::size_t t = 0; t < count; ++t) {
      out << seed << ',' << t << ',' << format_double(std::log(a.records[t].dist)) << ','
          << format_double(std::log(b.records[t].dist)) << '\n';
    }
    std::optional<double> slope;
    if (a.status == Status::kConverged && b.status == Status::kConverged) {
      slope = headtohead_slope(a, b, cfg.tol, cfg.fit_upper);
    }
    if (slope) {
      out << "# slope=" << format_double(*slope) << '\n';
    } else {
      out << "# slope=none\n";
      all_ok = false;
    }
  }
  finish(out, cfg.output);
  return all_ok ? 0 : 1;
}

int cmd_slopes(const ExperimentConfig& cfg) {
  const auto rows = compute_slopes(cfg);
  std::ofstream out = open_output(cfg.output);
  out << "n,m,mean_slope,slopes_used,sqrt_log_n,within_band\n";
  bool ok = true;
  for (const auto& r : rows) {
    out << r.n << ',' << r.m << ',' << format_double(r.mean_slope) << ','
        << r.slopes_used << ',' << format_double(r.sqrt_log_n) << ','
        << flag(r.within_band) << '\n';
    ok = ok && r.within_band;
  }
  finish(out, cfg.output);
  return ok ? 0 : 1;
}

int cmd_sweep(const ExperimentConfig& cfg) {
  const std::string dir = cfg.output;
  const SweepResult result = run_sweep(cfg, dir + "/traces");
  const std::string summary_path = dir + "/summary.csv";
  std::ofstream summary = open_output(summary_path);
  summary << "n,m,method,init,median_iterations,converged,diverged,init_failures\n";
  for (const auto& c : result.cells) {
    const auto converged =
        std::count_if(c.iterations.begin(), c.iterations.end(),
                      [](double v) { return std::isfinite(v); });
    summary << c.n << ',' << c.m << ',' << to_string(c.method) << ','
            << to_string(cfg.init) << ',' << format_double(c.median) << ','
            << converged << ',' << c.diverged << ',' << c.failed << '\n';
  }
  finish(summary, summary_path);
  const std::string dom_path = dir + "/dominance.csv";
  std::ofstream dom = open_output(dom_path);
  dom << "n,m,gd_converges,polyak_faster,nesterov_faster,momentum_agree,ok\n";
  bool ok = true;
  for (const auto& d : result.dominance) {
    dom << d.n << ',' << d.m << ',' << flag(d.gd_converges) << ','
        << flag(d.polyak_faster) << ',' << flag(d.nesterov_faster) << ','
        << flag(d.momentum_agree) << ',' << flag(d.ok()) << '\n';
    ok = ok && d.ok();
  }
  finish(dom, dom_path);
  return ok ? 0 : 1;
}

int cmd_loo(const ExperimentConfig& cfg) {
  cfg.validate();
  const long n = cfg.n_list.front();
  const long m = cfg.m_for(0);
  const double threshold = loo_proximity_bound(n, cfg.ric);
  std::ofstream out = open_output(cfg.output);
  out << "seed,method,iter,proximity,threshold,within,incoherence_via_loo\n";
  bool ok = true;
  for (const std::uint64_t seed : cfg.seed_list) {
    const Problem p = make_problem(n, m, seed);
    const Vector x0 = initial_point(p, cfg.init, seed);
    for (const Method method : cfg.methods) {
      SolverParams params = params_for(cfg, n, x0.norm(), method);
      params.max_iters = cfg.loo_iters;
      const LooBundle bundle = loo_run(p.ens, p.obs, x0, params, p.gt);
      for (std::size_t t = 0; t < bundle.proximity.size(); ++t) {
        const bool within = bundle.proximity[t] <= threshold;
        ok = ok && within;
        out << seed << ',' << to_string(method) << ',' << t << ','
            << format_double(bundle.proximity[t]) << ',' << format_double(threshold)
            << ',' << flag(within) << ',' << flag(bundle.incoherence_via_loo[t]) << '\n';
      }
    }
  }
  finish(out, cfg.output);
  return ok ? 0 : 1;
}

int cmd_oracle(const ExperimentConfig& cfg) {
  cfg.validate();
  const double mu = cfg.oracle_mu, L = cfg.oracle_L;
  const double kappa = L / mu;
  const double rk = std::sqrt(kappa);
  std::ofstream out = open_output(cfg.output);
  out << "method,mu,L,eta,beta,ratio,bound,pass\n";
  bool ok = true;
  for (const Method method :
       {Method::kGradientDescent, Method::kPolyak, Method::kNesterov}) {
    const QuadraticParams qp = quadratic_params(mu, L, method);
    const double ratio = quadratic_oracle(mu, L, method, cfg.oracle_steps);
    double bound = 0.0;
    switch (method) {
      case Method::kGradientDescent: bound = 1.0 - 1.0 / kappa + 0.005; break;
      case Method::kPolyak: bound = (rk - 1.0) / (rk + 1.0) + 0.02; break;
      case Method::kNesterov: bound = 1.0 - 1.0 / rk + 0.02; break;
    }
    const bool pass = ratio <= bound;
    ok = ok && pass;
    out << to_string(method) << ',' << format_double(mu) << ',' << format_double(L)
        << ',' << format_double(qp.eta) << ',' << format_double(qp.beta) << ','
        << format_double(ratio) << ',' << format_double(bound) << ',' << flag(pass)
        << '\n';
  }
  finish(out, cfg.output);
  return ok ? 0 : 1;
}

int cmd_cdp(const ExperimentConfig& cfg) {
  cfg.validate();
  const GrayImage image = cfg.cdp_image.empty() ? synthetic_image() : read_pgm(cfg.cdp_image);
  const std::uint64_t seed = cfg.seed_list.front();
  CdpOptions options;
  options.schedule = cfg.schedule;
  options.eta = cfg.eta;
  options.beta = cfg.beta;
  std::vector<CdpTrace> traces;
  for (const Method method : cfg.methods) {
    traces.push_back(cdp_run(image.pixels, image.height, image.width, cfg.cdp_masks,
                             method, cfg.cdp_iters, seed, options));
  }
  std::ofstream out = open_output(cfg.output);
  out << "# masks=" << cfg.cdp_masks << " height=" << image.height
      << " width=" << image.width << '\n';
  for (const auto& tr : traces) {
    const double per_iter =
        tr.steps > 0 ? static_cast<double>(tr.iteration_ffts) / tr.steps : 0.0;
    out << "# method=" << to_string(tr.method) << " status=" << to_string(tr.status)
        << " eta=" << format_double(tr.eta) << " beta=" << format_double(tr.beta)
        << " ffts_per_iteration=" << format_double(per_iter) << '\n';
  }
  out << "iter";
  for (const auto& tr : traces) out << ",rel_err_" << to_string(tr.method);
  out << '\n';
  for (int t = 0; t <= cfg.cdp_iters; ++t) {
    out << t;
    for (const auto& tr : traces) {
      out << ','
          << format_double(static_cast<std::size_t>(t) < tr.rel_err.size()
                               ? tr.rel_err[t]
                               : kNaN);
    }
    out << '\n';
  }
  finish(out, cfg.output);

  const ComplexVector truth = image.pixels.cast<Complex>();
  for (const auto& tr : traces) {
    const Complex inner = tr.final_iterate.dot(truth);
    const Complex phase = std::abs(inner) > 0.0 ? inner / std::abs(inner) : Complex(1.0);
    GrayImage recovered = image;
    recovered.pixels = (phase * tr.final_iterate).real();
    write_pgm(cfg.output + "." + std::string(to_string(tr.method)) + ".pgm", recovered);
  }

  bool ok = true;
  const CdpTrace* gd = nullptr;
  for (const auto& tr : traces) {
    if (tr.method == Method::kGradientDescent) gd = &tr;
    ok = ok && tr.iteration_ffts == 2L * cfg.cdp_masks * tr.steps;
  }
  if (gd) {
    for (const auto& tr : traces) {
      if (&tr == gd) continue;
      ok = ok && tr.status != Status::kDiverged && gd->status != Status::kDiverged &&
           tr.rel_err.back() < gd->rel_err.back();
    }
  }
  return ok ? 0 : 1;
}

int cmd_concentration(const ExperimentConfig& cfg) {
  cfg.validate();
  const long n = cfg.n_list.front();
  const long m = cfg.m_for(0);
  std::ofstream out = open_output(cfg.output);
  out << "seed,n,m,max_row_norm,row_norm_bound,row_norm_ok,max_projection,"
         "projection_bound,projection_ok\n";
  bool ok = true;
  for (const std::uint64_t seed : cfg.seed_list) {
    const SensingEnsemble ens = sample_ensemble(m, n, seed);
    const ConcentrationReport r = concentration_report(ens, probe_vector(n, seed));
    ok = ok && r.row_norm_ok && r.projection_ok;
    out << seed << ',' << n << ',' << m << ',' << format_double(r.max_row_norm) << ','
        << format_double(r.row_norm_bound) << ',' << flag(r.row_norm_ok) << ','
        << format_double(r.max_projection) << ',' << format_double(r.projection_bound)
        << ',' << flag(r.projection_ok) << '\n';
  }
  finish(out, cfg.output);
  return ok ? 0 : 1;
}

int dispatch(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::kRun: return cmd_run(cfg);
    case Experiment::kSweep: return cmd_sweep(cfg);
    case Experiment::kHeadToHead: return cmd_headtohead(cfg);
    case Experiment::kSlopes: return cmd_slopes(cfg);
    case Experiment::kLoo: return cmd_loo(cfg);
    case Experiment::kOracle: return cmd_oracle(cfg);
    case Experiment::kCdp: return cmd_cdp(cfg);
    case Experiment::kConcentration: return cmd_concentration(cfg);
  }
  return 2;
}

}  // namespace prbench
