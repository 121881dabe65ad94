// Command-line driver: single-point verification, grid runs, map export and
// symplectic solving for the special instanton monad.

#include "instanton/instanton.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace instanton;

struct CommonOpts {
  std::string engine = "auto";
  std::size_t primes = 3;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::size_t trials = 100;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--engine", o.engine, "rank engine: exact|multimodular|auto")
      ->check(CLI::IsMember({"exact", "multimodular", "auto"}));
  cmd->add_option("--primes", o.primes, "primes for the multimodular engine");
  cmd->add_option("--seed", o.seed, "seed for primes and sample points");
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  cmd->add_option("--format", o.format, "report format: json|csv|md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  os << text;
}

int cmd_verify(int k, int n, const CommonOpts& o) {
  run::RunConfig config;
  config.n_min = config.n_max = n;
  config.k_min = config.k_max = k;
  config.engine = rank_engine_from_string(o.engine);
  config.prime_count = o.primes;
  config.seed = o.seed;
  config.monad_trials = o.trials;
  config.format = run::report_format_from_string(o.format);
  config.validate();
  const auto rep =
      run::verify_point(k, n, config.engine_config(), o.trials, o.seed);
  emit(run::render_reports({rep}, config.format, config.echo()), o.out);
  std::cerr << "verify (n=" << n << ", k=" << k << "): "
            << (rep.all_pass() ? "all claims pass" : "FAILING CLAIMS")
            << "\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_grid(const run::RunConfig& config) {
  const auto res = run::run_grid(config);
  if (config.out_path.empty()) std::cout << res.report_text;
  std::size_t failed = 0;
  for (const auto& r : res.reports)
    for (const auto& c : r.claims)
      if (!c.pass) ++failed;
  std::cerr << "grid: " << res.reports.size() << " points ("
            << res.cached_points << " cached), " << failed
            << " failing claims\n";
  return res.all_pass ? 0 : 1;
}

int cmd_export_map(const std::string& name, int k, int n,
                   const std::string& out_path, bool kernel) {
  const auto h = maps::build_named_map(name, k, n);
  std::ostringstream os;
  if (kernel) {
    maps::write_kernel(os, h, la::kernel_basis(h.matrix));
  } else {
    la::write_triplets(os, h.name, h.k, h.n, h.matrix);
  }
  emit(os.str(), out_path);
  return 0;
}

int cmd_symplectic(int k, int n, const std::string& out_path,
                   const std::string& b_out_path) {
  const auto b = monad::build_special_B(k, n);
  const auto sol = monad::solve_symplectic(b);
  std::ostringstream os;
  la::write_triplets(os, "J", k, n, sol.J);
  emit(os.str(), out_path);
  if (!b_out_path.empty()) {
    std::ostringstream bs;
    b.write(bs);
    emit(bs.str(), b_out_path);
  }
  std::cerr << "symplectic (n=" << n << ", k=" << k
            << "): solution space dim " << sol.solution_space_dim
            << ", nondegenerate sample "
            << (sol.nondegenerate ? "found" : "NOT FOUND")
            << ", B.J.Bt == 0: "
            << (monad::bjbt_is_zero(b, sol.J) ? "yes" : "NO") << "\n";
  return sol.nondegenerate ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of special symplectic instanton bundle "
               "cohomology"};
  app.require_subcommand(1);

  int k = 2, n = 1;
  CommonOpts opts;

  auto* verify = app.add_subcommand("verify", "verify one (n, k) point");
  verify->add_option("--k", k, "quantum number k")->required();
  verify->add_option("--n", n, "n of the ambient space P^(2n+1)")->required();
  verify->add_option("--trials", opts.trials, "monad sample points");
  add_common(verify, opts);

  run::RunConfig grid_config;
  std::string grid_engine = "auto", grid_format = "json";
  auto* grid = app.add_subcommand("grid", "verify a grid of (n, k) points");
  grid->add_option("--n-min", grid_config.n_min, "smallest n");
  grid->add_option("--n-max", grid_config.n_max, "largest n");
  grid->add_option("--k-min", grid_config.k_min, "smallest k");
  grid->add_option("--k-max", grid_config.k_max, "largest k");
  grid->add_option("--engine", grid_engine, "rank engine")
      ->check(CLI::IsMember({"exact", "multimodular", "auto"}));
  grid->add_option("--primes", grid_config.prime_count, "multimodular primes");
  grid->add_option("--seed", grid_config.seed, "seed");
  grid->add_option("--trials", grid_config.monad_trials,
                   "monad sample points");
  grid->add_option("--out", grid_config.out_path, "report file");
  grid->add_option("--format", grid_format, "json|csv|md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  grid->add_option("--cache-dir", grid_config.cache_dir,
                   "cache directory (or INSTANTON_CACHE_DIR)");

  std::string map_name;
  bool export_kernel = false;
  auto* exp = app.add_subcommand("export-map",
                                 "dump a named map as sparse triplets");
  exp->add_option("--name", map_name, "map name")->required();
  exp->add_option("--k", k, "quantum number k")->required();
  exp->add_option("--n", n, "n of the ambient space")->required();
  exp->add_option("--out", opts.out, "output file (default: stdout)");
  exp->add_flag("--kernel", export_kernel,
                "dump a labeled right-kernel basis instead of the matrix");

  std::string b_out;
  auto* sym = app.add_subcommand(
      "symplectic", "solve for a compatible antisymmetric J");
  sym->add_option("--k", k, "quantum number k")->required();
  sym->add_option("--n", n, "n of the ambient space")->required();
  sym->add_option("--out", opts.out, "output file (default: stdout)");
  sym->add_option("--b-out", b_out, "also write the monad matrix B here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(k, n, opts);
    if (grid->parsed()) {
      grid_config.engine = rank_engine_from_string(grid_engine);
      grid_config.format = run::report_format_from_string(grid_format);
      if (grid_config.cache_dir.empty()) {
        if (const char* env = std::getenv("INSTANTON_CACHE_DIR"))
          grid_config.cache_dir = env;
      }
      return cmd_grid(grid_config);
    }
    if (exp->parsed())
      return cmd_export_map(map_name, k, n, opts.out, export_kernel);
    if (sym->parsed()) return cmd_symplectic(k, n, opts.out, b_out);
  } catch (const run::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const la::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
