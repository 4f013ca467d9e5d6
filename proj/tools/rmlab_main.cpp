#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/config.hpp"
#include "cli/runners.hpp"
#include "kernels/kernels.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out;
  std::string seed;
  std::string workers;
  std::string n;
  std::string eps;
  std::string samples;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "key=value config file");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--seed", f.seed, "master seed");
  cmd->add_option("--workers", f.workers, "worker threads (0 = hardware)");
  cmd->add_option("--n", f.n, "matrix dimension / node count");
  cmd->add_option("--eps", f.eps, "accuracy epsilon");
  cmd->add_option("--samples", f.samples, "Monte Carlo sample count");
}

int run(const std::string& verb, const CommonFlags& f,
        const std::vector<std::string>& extra) {
  rml::cli::Config cfg;
  if (!f.config_path.empty()) {
    cfg = rml::cli::Config::from_file(f.config_path);
  }
  // flags override file values
  if (!f.out.empty()) cfg.set("out", f.out);
  if (!f.seed.empty()) cfg.set("seed", f.seed);
  if (!f.workers.empty()) cfg.set("workers", f.workers);
  if (!f.n.empty()) cfg.set("n", f.n);
  if (!f.eps.empty()) cfg.set("eps", f.eps);
  if (!f.samples.empty()) cfg.set("samples", f.samples);
  for (const auto& kv : extra) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "expected key=value, got '" << kv << "'\n";
      return 2;
    }
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  cfg.set("experiment", verb);

  const auto res = rml::cli::run_experiment(verb, cfg);
  for (const auto& line : res.notes) std::cout << line << "\n";
  for (const auto& [name, pass] : res.checks) {
    std::cout << "CHECK " << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
  }
  std::cout << (res.ok ? "OK" : "FAILED") << "\n";
  return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rmlab: random-data numerics laboratory"};
  app.require_subcommand(1);

  const std::vector<std::string> verbs = {
      "toda-t1",        "qr-halting",     "cg-halting",
      "universality-compare", "theorem1", "conditions",
      "lattice-shock",  "lattice-driven", "fredholm-grid",
      "export-matrix",  "export-spectral"};

  struct Sub {
    CLI::App* cmd;
    CommonFlags flags;
    std::vector<std::string> extra;
  };
  std::vector<Sub> subs(verbs.size());
  for (std::size_t i = 0; i < verbs.size(); ++i) {
    subs[i].cmd = app.add_subcommand(verbs[i]);
    add_common(subs[i].cmd, subs[i].flags);
    subs[i].cmd->add_option("--set", subs[i].extra,
                            "extra key=value overrides");
  }
  auto* kernels_cmd = app.add_subcommand("kernels", "show the active SIMD lane");

  CLI11_PARSE(app, argc, argv);

  if (kernels_cmd->parsed()) {
    std::cout << "active kernels: " << rml::kernels::active().name << "\n";
    return 0;
  }

  try {
    for (std::size_t i = 0; i < verbs.size(); ++i) {
      if (subs[i].cmd->parsed()) {
        return run(verbs[i], subs[i].flags, subs[i].extra);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
