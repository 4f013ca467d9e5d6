#include "cli/runners.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "common/errors.hpp"
#include "common/parallel.hpp"
#include "ensembles/ensembles.hpp"
#include "fredholm/fredholm.hpp"
#include "iterative/iterative.hpp"
#include "lattice/diagnostics.hpp"
#include "lattice/lattice.hpp"
#include "spectral/semicircle.hpp"
#include "spectral/spectral.hpp"
#include "stats/conditions.hpp"
#include "stats/edge_suite.hpp"
#include "stats/empirical.hpp"
#include "stats/scalings.hpp"
#include "toda/toda.hpp"

namespace rml::cli {

namespace {

namespace fs = std::filesystem;

// Full precision for CSV payloads (byte-exact round trips)...
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ...and a short form for human-facing summary lines.
std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Context {
  std::string experiment;
  const Config& cfg;
  std::string out_dir;
  std::string hash;
  std::uint64_t seed;
  unsigned workers;
};

Context make_context(const std::string& experiment, const Config& cfg) {
  Context ctx{experiment, cfg, cfg.get_string("out", "."), cfg.hash_hex(),
              cfg.get_u64("seed", 1), 0};
  const std::size_t w = cfg.get_size("workers", 0);
  ctx.workers = w == 0 ? default_workers() : static_cast<unsigned>(w);
  fs::create_directories(ctx.out_dir);
  return ctx;
}

std::ofstream open_output(const Context& ctx, const std::string& name) {
  const std::string path = ctx.out_dir + "/" + name;
  std::ofstream os(path, std::ios::binary);  // fixed newlines on any host
  if (!os) throw ParameterError("cannot open output file '" + path + "'");
  os << "# rmlab experiment=" << ctx.experiment << " config=" << ctx.hash
     << " seed=" << ctx.seed << "\n";
  return os;
}

void write_summary(const Context& ctx, const RunResult& res) {
  auto os = open_output(ctx, "summary.txt");
  for (const auto& line : res.notes) os << line << "\n";
  for (const auto& [name, pass] : res.checks) {
    os << "CHECK " << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
  }
}

// Trajectory dump, sample-thinned so even long runs stay under ~200k rows.
void write_trajectory_csv(const Context& ctx,
                          const lattice::Trajectory& traj) {
  const std::size_t samples = traj.times.size();
  const std::size_t max_rows = 200000;
  const std::size_t per_sample = traj.k_count;
  std::size_t thin = 1;
  if (samples * per_sample > max_rows) {
    thin = (samples * per_sample + max_rows - 1) / max_rows;
  }
  auto os = open_output(ctx, "trajectory.csv");
  os << "t,k,x,v\n";
  for (std::size_t s = 0; s < samples; s += thin) {
    for (std::size_t k = 1; k <= per_sample; ++k) {
      os << fmt(traj.times[s]) << ',' << k << ','
         << fmt(traj.positions[s][k - 1]) << ','
         << fmt(traj.velocities[s][k - 1]) << "\n";
    }
  }
}

ensembles::EnsembleSpec spec_of(const Config& cfg, const std::string& kind_key,
                                const std::string& n_key) {
  ensembles::EnsembleSpec spec;
  spec.kind = ensembles::kind_from_name(cfg.get_string(kind_key, "goe"));
  spec.n = cfg.get_size(n_key, 100);
  spec.validate();
  return spec;
}

// ---- Monte Carlo banks ----------------------------------------------------

struct SpectraBank {
  std::vector<spectral::SpectralData> spectra;  // valid samples, index order
  std::vector<std::size_t> indices;             // original sample indices
  std::size_t skipped = 0;
};

SpectraBank make_spectra(const ensembles::EnsembleSpec& spec,
                         std::uint64_t master_seed, std::size_t count,
                         unsigned workers) {
  std::vector<std::optional<spectral::SpectralData>> slots(count);
  parallel_for(count, workers, [&](std::size_t i) {
    try {
      slots[i] = spectral::analyze(
          ensembles::sample(spec, ensembles::stream_seed(master_seed, i)));
    } catch (const NumericError&) {
      slots[i].reset();
    }
  });
  SpectraBank bank;
  bank.spectra.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (slots[i]) {
      bank.spectra.push_back(std::move(*slots[i]));
      bank.indices.push_back(i);
    } else {
      ++bank.skipped;
    }
  }
  return bank;
}

struct T1Record {
  std::size_t index = 0;
  double t1 = 0.0;
  double x11_err = 0.0;     // |lambda_max - X11(T1)|
  double scaled_t1 = 0.0;
  double scaled_inv_gap = 0.0;
};

struct T1Bank {
  std::vector<T1Record> records;  // halted samples, index order
  std::size_t skipped = 0;        // non-halting / degenerate
};

T1Bank make_t1(const SpectraBank& spectra, double eps,
               const stats::ScalingConstants& c, std::size_t n,
               unsigned workers) {
  const std::size_t count = spectra.spectra.size();
  std::vector<std::optional<T1Record>> slots(count);
  parallel_for(count, workers, [&](std::size_t i) {
    try {
      const auto& sd = spectra.spectra[i];
      const auto clock = toda::halting_time_t1(sd, eps);
      T1Record rec;
      rec.index = spectra.indices[i];
      rec.t1 = clock.t1;
      rec.x11_err = std::fabs(sd.lambda_max() - clock.x11_at_t1);
      rec.scaled_t1 = stats::theorem1_scale(clock.t1, n, eps, c);
      rec.scaled_inv_gap = stats::gap_scale(sd, n, c);
      slots[i] = rec;
    } catch (const NumericError&) {
      slots[i].reset();
    }
  });
  T1Bank bank;
  for (auto& s : slots) {
    if (s) {
      bank.records.push_back(*s);
    } else {
      ++bank.skipped;
    }
  }
  return bank;
}

std::vector<double> tau_of(const std::vector<double>& values) {
  return stats::tau_normalize(stats::EmpiricalDistribution(values)).samples();
}

// ---- experiments ----------------------------------------------------------

RunResult run_toda_t1(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "kind", "n", "eps", "samples", "seed",
                         "out", "workers", "cv", "bv", "region_tau"});
  RunResult res;
  const auto spec = spec_of(ctx.cfg, "kind", "n");
  const double eps = ctx.cfg.get_double("eps", 1e-6);
  const std::size_t samples = ctx.cfg.get_size("samples", 200);
  stats::ScalingConstants c{ctx.cfg.get_double("cv", 1.0),
                            ctx.cfg.get_double("bv", 2.0)};
  const double region_tau = ctx.cfg.get_double("region_tau", 0.5);

  res.note("experiment: toda-t1");
  res.note("ensemble: " + std::string(ensembles::kind_name(spec.kind)));
  res.note("n: " + std::to_string(spec.n));
  res.note("eps: " + fmt6(eps));
  res.note("samples: " + std::to_string(samples));
  if (!stats::scaling_region_ok(eps, spec.n, region_tau)) {
    res.note("WARNING: (eps, n) outside the halting-time scaling region");
  }

  const auto spectra = make_spectra(spec, ctx.seed, samples, ctx.workers);
  const auto bank = make_t1(spectra, eps, c, spec.n, ctx.workers);
  res.note("skipped_spectra: " + std::to_string(spectra.skipped));
  res.note("skipped_halting: " + std::to_string(bank.skipped));

  {
    auto os = open_output(ctx, "records.csv");
    os << "sample,ensemble,n,eps,t1,x11_err,scaled_t1,scaled_inv_gap\n";
    for (const auto& r : bank.records) {
      os << r.index << ',' << ensembles::kind_name(spec.kind) << ','
         << spec.n << ',' << fmt(eps) << ',' << fmt(r.t1) << ','
         << fmt(r.x11_err) << ',' << fmt(r.scaled_t1) << ','
         << fmt(r.scaled_inv_gap) << "\n";
    }
  }

  if (bank.records.size() >= 2) {
    std::vector<double> t1s;
    double max_err = 0.0;
    for (const auto& r : bank.records) {
      t1s.push_back(r.t1);
      max_err = std::max(max_err, r.x11_err);
    }
    const auto tau = tau_of(t1s);
    {
      auto os = open_output(ctx, "tau_samples.csv");
      os << "tau\n";
      for (double v : tau) os << fmt(v) << "\n";
    }
    {
      auto os = open_output(ctx, "tau_hist.csv");
      stats::write_csv(os, stats::histogram_fd(stats::EmpiricalDistribution(tau)));
    }
    stats::EmpiricalDistribution t1d(t1s);
    res.note("t1_mean: " + fmt6(t1d.mean()));
    res.note("t1_std: " + fmt6(t1d.stddev()));
    res.note("max_corollary_err: " + fmt6(max_err));
    res.check("corollary_per_sample", max_err < eps,
              "max |lambda_max - X11(T1)| = " + fmt6(max_err));
  }
  res.check("no_silent_loss",
            bank.records.size() + bank.skipped + spectra.skipped == samples,
            "all samples accounted for");
  return res;
}

RunResult run_theorem1(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "kind", "n", "eps", "samples", "seed",
                         "out", "workers", "cv_list", "bv", "ks_threshold",
                         "region_tau"});
  RunResult res;
  const auto spec = spec_of(ctx.cfg, "kind", "n");
  const double eps = ctx.cfg.get_double("eps", 1e-8);
  const std::size_t samples = ctx.cfg.get_size("samples", 500);
  const double bv = ctx.cfg.get_double("bv", 2.0);
  const double ks_threshold = ctx.cfg.get_double("ks_threshold", 0.1);
  std::vector<double> cv_list{0.5, 1.0, 2.0};
  if (ctx.cfg.has("cv_list")) cv_list = ctx.cfg.get_grid("cv_list");

  if (!stats::scaling_region_ok(eps, spec.n,
                                ctx.cfg.get_double("region_tau", 0.5))) {
    res.note("WARNING: (eps, n) outside the halting-time scaling region");
  }

  const auto spectra = make_spectra(spec, ctx.seed, samples, ctx.workers);
  std::vector<double> ks_by_cv;
  for (double cv : cv_list) {
    stats::ScalingConstants c{cv, bv};
    const auto bank = make_t1(spectra, eps, c, spec.n, ctx.workers);
    std::vector<double> st1, sig;
    for (const auto& r : bank.records) {
      st1.push_back(r.scaled_t1);
      sig.push_back(r.scaled_inv_gap);
    }
    ks_by_cv.push_back(ks_two_sample(stats::EmpiricalDistribution(st1),
                                     stats::EmpiricalDistribution(sig)));
    if (cv == 1.0) {
      auto os = open_output(ctx, "scaled_samples.csv");
      os << "sample,scaled_t1,scaled_inv_gap\n";
      for (const auto& r : bank.records) {
        os << r.index << ',' << fmt(r.scaled_t1) << ','
           << fmt(r.scaled_inv_gap) << "\n";
      }
      res.note("halted: " + std::to_string(bank.records.size()));
      res.note("skipped: " +
               std::to_string(bank.skipped + spectra.skipped));
    }
  }

  bool bit_identical = true;
  for (double ks : ks_by_cv) {
    if (ks != ks_by_cv.front()) bit_identical = false;
  }
  for (std::size_t i = 0; i < cv_list.size(); ++i) {
    res.note("ks[cv=" + fmt6(cv_list[i]) + "]: " + fmt6(ks_by_cv[i]));
  }
  res.check("ks_cv_invariant", bit_identical,
            "KS identical across the C_v sweep");
  res.check("ks_below_threshold", ks_by_cv.front() < ks_threshold,
            "KS = " + fmt6(ks_by_cv.front()));
  return res;
}

RunResult run_halting_compare(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "algorithm", "kind_a", "kind_b", "n",
                         "eps", "samples", "seed", "out", "workers",
                         "ks_threshold", "k_max"});
  RunResult res;
  const std::string algorithm = ctx.cfg.get_string("algorithm", "toda");
  const std::size_t n = ctx.cfg.get_size("n", 100);
  const double eps = ctx.cfg.get_double("eps", 1e-6);
  const std::size_t samples = ctx.cfg.get_size("samples", 500);
  const double ks_threshold = ctx.cfg.get_double("ks_threshold", 0.1);
  const std::size_t k_max = ctx.cfg.get_size("k_max", 20000);

  auto halting_samples = [&](const std::string& kind_key,
                             std::uint64_t seed_salt, std::size_t& skipped)
      -> std::vector<double> {
    ensembles::EnsembleSpec spec;
    spec.kind = ensembles::kind_from_name(ctx.cfg.get_string(kind_key));
    spec.n = n;
    const std::uint64_t master = ctx.seed ^ seed_salt;
    std::vector<double> out;
    if (algorithm == "toda") {
      const auto spectra = make_spectra(spec, master, samples, ctx.workers);
      stats::ScalingConstants c;
      const auto bank = make_t1(spectra, eps, c, n, ctx.workers);
      skipped = spectra.skipped + bank.skipped;
      for (const auto& r : bank.records) out.push_back(r.t1);
    } else if (algorithm == "qr") {
      if (spec.beta() != 2) {
        std::vector<std::optional<double>> slots(samples);
        parallel_for(samples, ctx.workers, [&](std::size_t i) {
          const auto h =
              ensembles::sample(spec, ensembles::stream_seed(master, i));
          const auto run = iterative::qr_halting(h.re, eps, k_max);
          if (run.halted) slots[i] = static_cast<double>(run.k);
        });
        for (const auto& s : slots) {
          if (s) {
            out.push_back(*s);
          } else {
            ++skipped;
          }
        }
      } else {
        throw ParameterError("qr halting compare supports real ensembles only");
      }
    } else {
      throw ParameterError("unknown algorithm '" + algorithm + "'");
    }
    return out;
  };

  std::size_t skipped_a = 0, skipped_b = 0;
  const auto ta = halting_samples("kind_a", 0x517cc1b727220a95ULL, skipped_a);
  const auto tb = halting_samples("kind_b", 0x2545f4914f6cdd1dULL, skipped_b);
  res.note("algorithm: " + algorithm);
  res.note("non_halting_a: " + std::to_string(skipped_a));
  res.note("non_halting_b: " + std::to_string(skipped_b));

  const auto tau_a = tau_of(ta);
  const auto tau_b = tau_of(tb);
  const double ks = stats::ks_two_sample(stats::EmpiricalDistribution(tau_a),
                                         stats::EmpiricalDistribution(tau_b));
  {
    auto os = open_output(ctx, "tau_a.csv");
    os << "tau\n";
    for (double v : tau_a) os << fmt(v) << "\n";
  }
  {
    auto os = open_output(ctx, "tau_b.csv");
    os << "tau\n";
    for (double v : tau_b) os << fmt(v) << "\n";
  }
  {
    auto os = open_output(ctx, "tau_hist_a.csv");
    stats::write_csv(os,
                     stats::histogram_fd(stats::EmpiricalDistribution(tau_a)));
  }
  {
    auto os = open_output(ctx, "tau_hist_b.csv");
    stats::write_csv(os,
                     stats::histogram_fd(stats::EmpiricalDistribution(tau_b)));
  }
  res.note("tau_ks: " + fmt6(ks));
  res.check("tau_ks_below_threshold", ks < ks_threshold, "KS = " + fmt6(ks));
  return res;
}

RunResult run_qr_halting(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "kind", "n", "eps", "samples", "seed",
                         "out", "workers", "k_max"});
  RunResult res;
  const auto spec = spec_of(ctx.cfg, "kind", "n");
  if (spec.beta() != 1) {
    throw ParameterError("qr-halting operates on real symmetric ensembles");
  }
  const double eps = ctx.cfg.get_double("eps", 1e-6);
  const std::size_t samples = ctx.cfg.get_size("samples", 200);
  const std::size_t k_max = ctx.cfg.get_size("k_max", 20000);

  std::vector<std::optional<iterative::QrRun>> slots(samples);
  parallel_for(samples, ctx.workers, [&](std::size_t i) {
    const auto h =
        ensembles::sample(spec, ensembles::stream_seed(ctx.seed, i));
    slots[i] = iterative::qr_halting(h.re, eps, k_max);
  });

  std::size_t non_halting = 0;
  std::vector<double> ks_counts;
  {
    auto os = open_output(ctx, "records.csv");
    os << "sample,algorithm,n,eps,k,residual_at_halt,halted\n";
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& run = *slots[i];
      os << i << ",qr," << spec.n << ',' << fmt(eps) << ',' << run.k << ','
         << fmt(run.residuals.back()) << ',' << (run.halted ? 1 : 0) << "\n";
      if (run.halted) {
        ks_counts.push_back(static_cast<double>(run.k));
      } else {
        ++non_halting;
      }
    }
  }
  res.note("non_halting: " + std::to_string(non_halting));
  if (ks_counts.size() >= 2 &&
      stats::EmpiricalDistribution(ks_counts).stddev() > 0.0) {
    const auto tau = tau_of(ks_counts);
    auto os = open_output(ctx, "tau_hist.csv");
    stats::write_csv(os,
                     stats::histogram_fd(stats::EmpiricalDistribution(tau)));
  }
  res.check("halted_majority", ks_counts.size() * 2 > samples,
            std::to_string(ks_counts.size()) + " of " +
                std::to_string(samples) + " halted");
  return res;
}

RunResult run_cg_halting(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "n", "m_ratio", "eps", "samples",
                         "seed", "out", "workers", "k_max"});
  RunResult res;
  const std::size_t n = ctx.cfg.get_size("n", 100);
  const double m_ratio = ctx.cfg.get_double("m_ratio", 2.0);
  const std::size_t m = static_cast<std::size_t>(
      std::ceil(m_ratio * static_cast<double>(n)));
  const double eps = ctx.cfg.get_double("eps", 1e-10);
  const std::size_t samples = ctx.cfg.get_size("samples", 200);
  const std::size_t k_max = ctx.cfg.get_size("k_max", 10000);

  std::vector<std::optional<iterative::CgRun>> slots(samples);
  parallel_for(samples, ctx.workers, [&](std::size_t i) {
    const auto sys =
        iterative::wishart_system(n, m, ensembles::stream_seed(ctx.seed, i));
    slots[i] = iterative::cg_halting(sys.a, sys.b, eps, k_max);
  });

  std::size_t non_halting = 0;
  std::vector<double> counts;
  {
    auto os = open_output(ctx, "records.csv");
    os << "sample,algorithm,n,eps,k,residual_at_halt,halted\n";
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& run = *slots[i];
      os << i << ",cg," << n << ',' << fmt(eps) << ',' << run.k << ','
         << fmt(run.residuals.back()) << ',' << (run.halted ? 1 : 0) << "\n";
      if (run.halted) {
        counts.push_back(static_cast<double>(run.k));
      } else {
        ++non_halting;
      }
    }
  }
  res.note("non_halting: " + std::to_string(non_halting));
  if (counts.size() >= 2 &&
      stats::EmpiricalDistribution(counts).stddev() > 0.0) {
    const auto tau = tau_of(counts);
    auto os = open_output(ctx, "tau_hist.csv");
    stats::write_csv(os,
                     stats::histogram_fd(stats::EmpiricalDistribution(tau)));
  }
  res.check("all_halted", non_halting == 0,
            std::to_string(non_halting) + " non-halting runs");
  return res;
}

RunResult run_conditions(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "kind", "p_grid", "cond1_n",
                         "cond1_samples", "s", "cond2_n_grid",
                         "cond2_samples", "edge_kind", "edge_n",
                         "edge_samples", "seed", "out", "workers", "bv"});
  RunResult res;
  const double bv = ctx.cfg.get_double("bv", 2.0);
  ensembles::EnsembleSpec spec;
  spec.kind = ensembles::kind_from_name(ctx.cfg.get_string("kind", "goe"));

  // Gap-dominance table: one sample set across the whole p grid, so the
  // complement probabilities are exactly monotone.
  std::vector<double> p_grid{0.3, 0.2, 0.1, 0.05, 0.02};
  if (ctx.cfg.has("p_grid")) p_grid = ctx.cfg.get_grid("p_grid");
  spec.n = ctx.cfg.get_size("cond1_n", 200);
  const std::size_t m1 = ctx.cfg.get_size("cond1_samples", 500);
  const auto bank1 = make_spectra(spec, ctx.seed, m1, ctx.workers);
  const auto pc =
      stats::condition1_complement_probabilities(bank1.spectra, p_grid);
  {
    auto os = open_output(ctx, "condition1_table.csv");
    os << "n,p,prob_complement\n";
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
      os << spec.n << ',' << fmt(p_grid[i]) << ',' << fmt(pc[i]) << "\n";
    }
  }
  bool monotone = true;
  for (std::size_t i = 1; i < pc.size(); ++i) {
    if (p_grid[i] < p_grid[i - 1] && pc[i] > pc[i - 1] + 1e-12) monotone = false;
  }
  res.check("cond1_monotone_in_p", monotone,
            "P(G^c) non-increasing as p decreases");

  // Regularity-event table over the n grid.
  const double s = ctx.cfg.get_double("s", 0.2);
  std::vector<std::size_t> n_grid{100, 200, 500};
  if (ctx.cfg.has("cond2_n_grid")) n_grid = ctx.cfg.get_size_grid("cond2_n_grid");
  const std::size_t m2 = ctx.cfg.get_size("cond2_samples", 200);
  {
    auto os = open_output(ctx, "condition2_table.csv");
    os << "n,s,prob,prob_beta_upper,prob_beta_lower,prob_edge_gaps,prob_rigidity\n";
    for (std::size_t n : n_grid) {
      ensembles::EnsembleSpec sp{spec.kind, n};
      const auto bank = make_spectra(sp, ctx.seed ^ 0x9e3779b9ULL, m2,
                                     ctx.workers);
      const auto gamma = spectral::semicircle_quantiles(n);
      std::size_t all = 0, c1 = 0, c2 = 0, c3 = 0, c4 = 0;
      for (const auto& sd : bank.spectra) {
        const auto r = stats::condition2(sd, s, bv, gamma);
        all += r.all();
        c1 += r.beta_upper;
        c2 += r.beta_lower;
        c3 += r.edge_gaps;
        c4 += r.rigidity;
      }
      const double denom = static_cast<double>(bank.spectra.size());
      os << n << ',' << fmt(s) << ',' << fmt(all / denom) << ','
         << fmt(c1 / denom) << ',' << fmt(c2 / denom) << ','
         << fmt(c3 / denom) << ',' << fmt(c4 / denom) << "\n";
      res.note("P(R_{" + std::to_string(n) + "," + fmt6(s) +
               "}): " + fmt6(all / denom));
    }
  }

  // Edge-statistics suite at edge_n with a cross-check at edge_n / 2.
  ensembles::EnsembleSpec espec;
  espec.kind = ensembles::kind_from_name(ctx.cfg.get_string("edge_kind", "gue"));
  espec.n = ctx.cfg.get_size("edge_n", 200);
  if (espec.n < 6) throw ParameterError("conditions: edge_n must be >= 6");
  const std::size_t em = ctx.cfg.get_size("edge_samples", 500);
  const auto ebank = make_spectra(espec, ctx.seed ^ 0x6a09e667ULL, em,
                                  ctx.workers);
  ensembles::EnsembleSpec hspec{espec.kind, espec.n / 2};
  const auto hbank = make_spectra(hspec, ctx.seed ^ 0xbb67ae85ULL, em,
                                  ctx.workers);
  const auto rep = stats::edge_statistics_suite(ebank.spectra, espec.n, bv,
                                                espec.beta());
  const auto rep_half = stats::edge_statistics_suite(hbank.spectra, hspec.n,
                                                     bv, hspec.beta());
  const auto cross = stats::edge_cross_n_ks(rep_half, rep);
  {
    auto os = open_output(ctx, "edge_report.csv");
    os << "component,ks_first_component,ks_half_normal,ks_cross_n\n";
    for (std::size_t k = 0; k < 3; ++k) {
      os << k << ',' << fmt(rep.ks_first_component[k]) << ','
         << fmt(rep.ks_half_normal[k]) << ',' << fmt(cross[k]) << "\n";
    }
  }
  res.note("degenerate_triples: " + std::to_string(rep.degenerate_triples));
  res.check("no_degenerate_triples", rep.degenerate_triples == 0,
            "scaled edge triples all distinct");
  return res;
}

RunResult run_lattice_shock(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "K", "a", "dt", "t_end", "stride",
                         "k_probe", "window", "binary_threshold", "seed",
                         "out", "workers"});
  RunResult res;
  const std::size_t k_count = ctx.cfg.get_size("K", 300);
  const double a = ctx.cfg.get_double("a", 2.0);
  const double dt = ctx.cfg.get_double("dt", 0.005);
  const double t_end = ctx.cfg.get_double("t_end", 60.0);
  const std::size_t stride = ctx.cfg.get_size("stride", 8);
  const std::size_t k_probe = ctx.cfg.get_size("k_probe", 9);
  const double window = ctx.cfg.get_double("window", 12.0);
  const double threshold = ctx.cfg.get_double("binary_threshold", 1e-2);

  auto state = lattice::init_shock(k_count, a);
  const auto traj = lattice::simulate(state, t_end, dt, stride);

  const double hygiene = lattice::truncation_displacement(traj);
  const double binary =
      lattice::binary_residual(traj, k_probe, t_end - window, window);

  write_trajectory_csv(ctx, traj);
  {
    auto os = open_output(ctx, "report.csv");
    os << "name,value\n";
    os << "truncation_displacement," << fmt(hygiene) << "\n";
    os << "binary_residual_k" << k_probe << ',' << fmt(binary) << "\n";
  }
  res.note("truncation_displacement: " + fmt6(hygiene));
  res.note("binary_residual: " + fmt6(binary));
  res.check("truncation_hygiene", hygiene < 1e-10,
            "far boundary displacement " + fmt6(hygiene));
  res.check("binary_periodicity", binary < threshold,
            "moving-frame residual " + fmt6(binary));
  return res;
}

RunResult run_lattice_driven(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "K", "a", "gamma", "gamma_grid",
                         "h_amp", "dt", "t_end", "stride", "k_probe",
                         "window", "decay_k_begin", "decay_k_end", "seed",
                         "out", "workers"});
  RunResult res;
  const std::size_t k_count = ctx.cfg.get_size("K", 200);
  const double a = ctx.cfg.get_double("a", 0.5);
  const double h_amp = ctx.cfg.get_double("h_amp", 0.1);
  const double dt = ctx.cfg.get_double("dt", 0.005);
  const double t_end = ctx.cfg.get_double("t_end", 60.0);
  const std::size_t stride = ctx.cfg.get_size("stride", 8);
  const std::size_t k_probe = ctx.cfg.get_size("k_probe", 3);
  const std::size_t decay_begin = ctx.cfg.get_size("decay_k_begin", 10);
  const std::size_t decay_end = ctx.cfg.get_size("decay_k_end", k_count / 2);

  struct Point {
    double gamma = 0.0;
    double hygiene = 0.0;
    double residual = 0.0;
    double decay_c = 0.0;
    double decay_slope = 0.0;
  };

  // single run (trajectory + report) or a sweep over gamma_grid
  std::vector<double> gammas{ctx.cfg.get_double("gamma", 3.0)};
  const bool sweep = ctx.cfg.has("gamma_grid");
  if (sweep) gammas = ctx.cfg.get_grid("gamma_grid");

  std::vector<Point> points(gammas.size());
  // runs are single-threaded and independent; sweep points go wide
  parallel_for(gammas.size(), sweep ? ctx.workers : 1, [&](std::size_t i) {
    const double gamma = gammas[i];
    const double period = 2.0 * 3.14159265358979323846 / gamma;
    const double window = ctx.cfg.get_double("window", 4.0 * period);
    auto state = lattice::init_driven(
        k_count, a, gamma,
        [h_amp](double th) { return h_amp * std::sin(th); });
    auto traj = lattice::simulate(state, t_end, dt, stride);
    Point p;
    p.gamma = gamma;
    p.hygiene = lattice::truncation_displacement(traj);
    p.residual = lattice::periodicity_residual(traj, k_probe, period,
                                               t_end - window - period,
                                               window)
                     .residual;
    const auto prof = lattice::decay_profile(traj, t_end, decay_begin,
                                             decay_end);
    p.decay_c = prof.c;
    p.decay_slope = prof.log_slope;
    points[i] = p;
    if (!sweep) write_trajectory_csv(ctx, traj);
  });

  {
    auto os = open_output(ctx, sweep ? "sweep.csv" : "report.csv");
    os << "gamma,periodicity_residual,decay_log_slope,decay_fit_c,"
          "truncation_displacement\n";
    for (const auto& p : points) {
      os << fmt(p.gamma) << ',' << fmt(p.residual) << ','
         << fmt(p.decay_slope) << ',' << fmt(p.decay_c) << ','
         << fmt(p.hygiene) << "\n";
    }
  }
  double worst_hygiene = 0.0;
  for (const auto& p : points) {
    worst_hygiene = std::max(worst_hygiene, p.hygiene);
    res.note("gamma " + fmt6(p.gamma) + ": residual " + fmt6(p.residual) +
             ", decay slope " + fmt6(p.decay_slope));
  }
  res.check("truncation_hygiene", worst_hygiene < 1e-10,
            "far boundary displacement " + fmt6(worst_hygiene));
  return res;
}

RunResult run_fredholm_grid(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "s_grid", "n", "seed", "out",
                         "workers"});
  RunResult res;
  std::vector<double> s_grid{0.5, 1.0, 2.0, 4.0, 8.0};
  if (ctx.cfg.has("s_grid")) s_grid = ctx.cfg.get_grid("s_grid");
  const std::size_t n = ctx.cfg.get_size("n", 60);

  bool monotone = true;
  bool identity_ok = true;
  bool converged_all = true;
  double prev = 2.0;
  {
    auto os = open_output(ctx, "grid.csv");
    os << "s,f_s,n_used,refinement_delta,converged,det_minus_product";
    for (int k = 1; k <= 8; ++k) os << ",lambda_" << k;
    os << "\n";
    for (double s : s_grid) {
      const auto g = fredholm::gap_probability(s, n);
      const auto d = fredholm::discretize(s, g.n_used);
      const auto pid = fredholm::product_identity(d);
      const auto lam = fredholm::eigenvalues(d);
      os << fmt(s) << ',' << fmt(g.value) << ',' << g.n_used << ','
         << fmt(g.refinement_delta) << ',' << (g.converged ? 1 : 0) << ','
         << fmt(pid.difference);
      for (std::size_t k = 0; k < 8; ++k) {
        os << ',' << fmt(k < lam.size() ? lam[k] : 0.0);
      }
      os << "\n";
      if (g.value >= prev) monotone = false;
      prev = g.value;
      if (pid.difference >= 1e-10) identity_ok = false;
      if (!g.converged) converged_all = false;
    }
  }
  res.check("f_s_strictly_decreasing", monotone, "gap probability decreasing");
  res.check("det_product_identity", identity_ok, "|det - product| < 1e-10");
  res.check("n_refinement_converged", converged_all,
            "N-doubling deltas below 1e-10");
  return res;
}

RunResult run_export_matrix(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "kind", "n", "seed", "out", "workers"});
  RunResult res;
  const auto spec = spec_of(ctx.cfg, "kind", "n");
  const auto m = ensembles::sample(spec, ctx.seed);
  auto os = open_output(ctx, "matrix.csv");
  ensembles::write_csv(os, m);
  res.note("wrote matrix.csv (" + std::string(ensembles::kind_name(spec.kind)) +
           ", n=" + std::to_string(spec.n) + ")");
  res.check("export", true, "ok");
  return res;
}

RunResult run_export_spectral(const Context& ctx) {
  ctx.cfg.restrict_keys({"experiment", "kind", "n", "seed", "out", "workers"});
  RunResult res;
  const auto spec = spec_of(ctx.cfg, "kind", "n");
  const auto sd = spectral::analyze(ensembles::sample(spec, ctx.seed));
  auto os = open_output(ctx, "spectral.csv");
  spectral::write_csv(os, sd);
  res.check("export", true, "ok");
  return res;
}

}  // namespace

void RunResult::check(const std::string& name, bool pass,
                      const std::string& detail) {
  checks.emplace_back(name + " (" + detail + ")", pass);
  if (!pass) ok = false;
}

RunResult run_experiment(const std::string& experiment, const Config& cfg) {
  const Context ctx = make_context(experiment, cfg);
  RunResult res;
  if (experiment == "toda-t1") {
    res = run_toda_t1(ctx);
  } else if (experiment == "theorem1") {
    res = run_theorem1(ctx);
  } else if (experiment == "universality-compare") {
    res = run_halting_compare(ctx);
  } else if (experiment == "qr-halting") {
    res = run_qr_halting(ctx);
  } else if (experiment == "cg-halting") {
    res = run_cg_halting(ctx);
  } else if (experiment == "conditions") {
    res = run_conditions(ctx);
  } else if (experiment == "lattice-shock") {
    res = run_lattice_shock(ctx);
  } else if (experiment == "lattice-driven") {
    res = run_lattice_driven(ctx);
  } else if (experiment == "fredholm-grid") {
    res = run_fredholm_grid(ctx);
  } else if (experiment == "export-matrix") {
    res = run_export_matrix(ctx);
  } else if (experiment == "export-spectral") {
    res = run_export_spectral(ctx);
  } else {
    throw ParameterError("unknown experiment '" + experiment + "'");
  }
  write_summary(ctx, res);
  return res;
}

}  // namespace rml::cli
