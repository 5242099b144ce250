// Command-line surface for the enclosing-depth library: depth computation
// with witnesses, instance generation, differential verification, scaling
// benchmarks. Exit codes: 0 success, 2 degenerate input, 3 parse error,
// 4 guard violation.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "encdepth/general.hpp"
#include "encdepth/generate.hpp"
#include "encdepth/geometry.hpp"
#include "encdepth/io.hpp"
#include "encdepth/planar.hpp"
#include "encdepth/reference.hpp"
#include "encdepth/result.hpp"

namespace {

using namespace encdepth;

constexpr int kExitOk = 0;
constexpr int kExitDegenerate = 2;
constexpr int kExitParse = 3;
constexpr int kExitGuard = 4;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

FileFormat format_for(const std::string& flag, const std::string& path) {
  if (flag == "csv") return FileFormat::csv;
  if (flag == "json") return FileFormat::json;
  if (!flag.empty()) throw ParseError("unknown format: " + flag);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return FileFormat::json;
  return FileFormat::csv;
}

Shape parse_shape(const std::string& text, int& cluster_k) {
  if (text == "annulus") return Shape::annulus;
  if (text == "gaussian-like") return Shape::gaussian_like;
  if (text.rfind("clusters:", 0) == 0) {
    try {
      cluster_k = std::stoi(text.substr(9));
    } catch (...) {
      throw ParseError("bad clusters shape: " + text);
    }
    return Shape::clusters;
  }
  throw ParseError("unknown shape: " + text + " (annulus | gaussian-like | clusters:K)");
}

std::uint64_t planar_call_bound(int n) {
  return static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(n / 3 + 1)))) + 1;
}

struct DepthRun {
  DepthResult result;
  std::string algorithm;
  double wall_ms = 0;
  std::uint64_t predicate_calls = 0;
};

DepthRun run_depth(const Instance& inst, std::string algorithm, int threads, bool prune) {
  if (algorithm == "auto") {
    if (inst.dimension == 1) algorithm = "analytic";
    else if (inst.dimension == 2) algorithm = "planar";
    else algorithm = "general";
  }
  if (algorithm == "planar" && inst.dimension != 2)
    throw GuardError("planar algorithm requires d = 2 (instance has d = " +
                     std::to_string(inst.dimension) + ")");
  if (algorithm == "general" && inst.dimension < 2)
    throw GuardError("general algorithm requires d >= 2");
  if (algorithm == "analytic" && inst.dimension != 1)
    throw GuardError("analytic algorithm requires d = 1");

  DepthRun run;
  run.algorithm = algorithm;
  stats::reset_predicate_calls();
  auto t0 = std::chrono::steady_clock::now();
  if (algorithm == "planar") {
    run.result = enclosing_depth_planar(inst);
  } else if (algorithm == "general") {
    GeneralOptions opts;
    opts.threads = threads;
    opts.prune = prune;
    run.result = enclosing_depth_general(inst, opts);
  } else if (algorithm == "analytic") {
    run.result = enclosing_depth_1d(inst);
  } else if (algorithm == "oracle") {
    std::uint64_t families = 0;
    run.result.depth = enclosing_depth_bruteforce(inst, &families);
    run.result.stats.subroutine_calls = families;
  } else {
    throw ParseError("unknown algorithm: " + algorithm);
  }
  run.wall_ms = elapsed_ms(t0);
  run.predicate_calls = stats::predicate_calls();
  return run;
}

void print_table_report(const DepthRun& run, bool include_witness) {
  std::cout << "depth            " << run.result.depth << '\n';
  std::cout << "algorithm        " << run.algorithm << '\n';
  if (include_witness) {
    if (const auto* pw = run.result.planar_witness()) {
      std::cout << "witness          3 intervals of size " << pw->k_plus_1 << '\n';
      for (const auto& block : pw->blocks) {
        std::cout << "  points        ";
        for (int p : block) std::cout << ' ' << p;
        std::cout << '\n';
      }
    } else if (const auto* gw = run.result.general_witness()) {
      std::cout << "witness          " << gw->halfspaces.size() << " halfspaces, k = " << gw->k
                << '\n';
      for (std::size_t i = 0; i < gw->sets.size(); ++i) {
        std::cout << "  S_" << (i + 1) << "           ";
        for (int p : gw->sets[i]) std::cout << ' ' << p;
        std::cout << '\n';
      }
    } else {
      std::cout << "witness          none\n";
    }
  }
  std::cout << "predicate_calls  " << run.predicate_calls << '\n';
  std::cout << "subroutine_calls " << run.result.stats.subroutine_calls << '\n';
  std::cout << "wall_ms          " << run.wall_ms << '\n';
}

int cmd_depth(const std::string& in_path, const std::string& format_flag,
              const std::optional<std::string>& query, const std::string& algorithm,
              bool no_witness, bool table, int threads, bool no_prune) {
  Instance inst = load_instance(in_path, format_for(format_flag, in_path), query);
  DepthRun run = run_depth(inst, algorithm, threads, !no_prune);
  if (table) {
    print_table_report(run, !no_witness);
  } else {
    std::cout << report_to_json(run.result, run.algorithm, !no_witness, run.wall_ms,
                                run.predicate_calls)
                     .dump(2)
              << '\n';
  }
  return kExitOk;
}

int cmd_gen(int n, int d, std::uint64_t seed, const std::string& shape_text,
            const std::string& out_path, const std::string& format_flag) {
  GenSpec spec;
  spec.n = n;
  spec.d = d;
  spec.seed = seed;
  spec.shape = parse_shape(shape_text, spec.cluster_k);
  Instance inst;
  try {
    inst = generate_instance(spec);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  FileFormat fmt = format_for(format_flag, out_path);
  if (out_path == "-") {
    save_instance(std::cout, inst, fmt);
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write file: " + out_path);
    save_instance(out, inst, fmt);
  }
  return kExitOk;
}

int cmd_verify(int n_max, int d, int trials, std::uint64_t seed) {
  if (d < 1) throw ParseError("verify: d must be >= 1");
  const int min_n = std::max(3, d + 1);
  if (n_max > bruteforce_guard(d))
    throw GuardError("verify needs n-max <= " + std::to_string(bruteforce_guard(d)) +
                     " for d = " + std::to_string(d) + " (oracle guard)");
  if (trials > 0 && n_max < min_n)
    throw GuardError("verify needs n-max >= " + std::to_string(min_n));

  DetRng meta(seed);
  int agreements = 0;
  for (int t = 0; t < trials; ++t) {
    GenSpec spec;
    spec.d = d;
    spec.n = static_cast<int>(meta.uniform(min_n, n_max));
    spec.shape = (t % 2 == 0) ? Shape::annulus : Shape::gaussian_like;
    spec.seed = meta.next_u64();
    Instance inst = generate_instance(spec);

    int oracle = enclosing_depth_bruteforce(inst);
    nlohmann::json results;
    results["oracle"] = oracle;
    bool ok = true;

    if (d >= 2) {
      DepthResult general = enclosing_depth_general(inst);
      results["general"] = general.depth;
      ok = ok && general.depth == oracle;
    }
    if (d == 2) {
      DepthResult planar = enclosing_depth_planar(inst);
      int tukey = tukey_depth_planar(inst);
      results["planar"] = planar.depth;
      results["tukey"] = tukey;
      ok = ok && planar.depth == oracle && planar.depth <= tukey;
    }
    if (d == 1) {
      DepthResult analytic = enclosing_depth_1d(inst);
      results["analytic"] = analytic.depth;
      ok = ok && analytic.depth == oracle;
    }

    if (!ok) {
      nlohmann::json failure;
      failure["trial"] = t;
      failure["results"] = results;
      failure["instance"] = instance_to_json(inst);
      std::cout << failure.dump(2) << '\n';
      return 1;
    }
    ++agreements;
  }

  nlohmann::json summary;
  summary["trials"] = trials;
  summary["agreements"] = agreements;
  summary["mismatches"] = 0;
  summary["d"] = d;
  summary["n_max"] = n_max;
  summary["seed"] = seed;
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_bench(const std::string& sizes_text, std::uint64_t seed) {
  std::vector<int> sizes;
  std::stringstream ss(sizes_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      sizes.push_back(std::stoi(item));
    } catch (...) {
      throw ParseError("bad size: " + item);
    }
  }

  std::cout << "        n  depth    wall_ms  subroutine_calls  bound  predicate_calls\n";
  bool bound_ok = true;
  double prev_ms = 0;
  int prev_n = 0;
  for (int n : sizes) {
    GenSpec spec;
    spec.n = n;
    spec.d = 2;
    spec.seed = seed;
    spec.shape = Shape::annulus;
    Instance inst = generate_instance(spec);

    stats::reset_predicate_calls();
    auto t0 = std::chrono::steady_clock::now();
    DepthResult r = enclosing_depth_planar(inst);
    double ms = elapsed_ms(t0);

    std::uint64_t bound = planar_call_bound(n);
    bool ok = r.stats.subroutine_calls <= bound;
    bound_ok = bound_ok && ok;

    std::printf("%9d  %5d  %9.2f  %16llu  %5llu  %15llu%s", n, r.depth, ms,
                static_cast<unsigned long long>(r.stats.subroutine_calls),
                static_cast<unsigned long long>(bound),
                static_cast<unsigned long long>(stats::predicate_calls()),
                ok ? "" : "  CALL-BOUND VIOLATION");
    if (prev_n > 0 && prev_ms > 0) {
      double per_doubling = std::pow(ms / prev_ms, 1.0 / std::log2(double(n) / double(prev_n)));
      std::printf("  x%.2f/doubling", per_doubling);
    }
    std::printf("\n");
    prev_ms = ms;
    prev_n = n;
  }
  return bound_ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"enclosing depth of a query point in a rational point set"};
  app.require_subcommand(1);

  // depth
  auto* depth = app.add_subcommand("depth", "compute the enclosing depth of an instance");
  std::string in_path, format_flag, algorithm = "auto";
  std::string query_text;
  bool no_witness = false, table = false, no_prune = false;
  int threads = 1;
  depth->add_option("--in", in_path, "instance file")->required();
  depth->add_option("--format", format_flag, "csv | json (default: by extension)");
  depth->add_option("--query", query_text, "query point, e.g. \"0,0\" (overrides the file)");
  depth->add_option("--algorithm", algorithm, "auto | planar | general | oracle")
      ->check(CLI::IsMember({"auto", "planar", "general", "oracle", "analytic"}));
  depth->add_flag("--no-witness", no_witness, "omit the witness from the report");
  depth->add_flag("--table", table, "human-readable output instead of JSON");
  depth->add_option("--threads", threads, "general driver enumeration threads");
  depth->add_flag("--no-prune", no_prune, "disable the general driver's early termination");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  int gen_n = 0, gen_d = 2;
  std::uint64_t gen_seed = 0;
  std::string gen_shape = "annulus", gen_out = "-", gen_format;
  gen->add_option("--n", gen_n, "number of data points")->required();
  gen->add_option("--d", gen_d, "dimension");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--shape", gen_shape, "annulus | gaussian-like | clusters:K");
  gen->add_option("--out", gen_out, "output file ('-' for stdout)");
  gen->add_option("--format", gen_format, "csv | json (default: by extension, json for '-')");

  // verify
  auto* verify = app.add_subcommand("verify", "differential tests against the oracles");
  int v_nmax = 10, v_d = 2, v_trials = 100;
  std::uint64_t v_seed = 0;
  verify->add_option("--n-max", v_nmax, "largest instance size");
  verify->add_option("--d", v_d, "dimension");
  verify->add_option("--trials", v_trials, "number of seeded instances");
  verify->add_option("--seed", v_seed, "RNG seed");

  // bench
  auto* bench = app.add_subcommand("bench", "planar scaling ladder");
  std::string b_sizes = "1000,10000,100000";
  std::uint64_t b_seed = 0;
  bench->add_option("--sizes", b_sizes, "comma-separated instance sizes");
  bench->add_option("--seed", b_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (app.got_subcommand(depth)) {
      std::optional<std::string> query;
      if (!query_text.empty()) query = query_text;
      return cmd_depth(in_path, format_flag, query, algorithm, no_witness, table, threads,
                       no_prune);
    }
    if (app.got_subcommand(gen)) {
      std::string fmt = gen_format;
      if (fmt.empty() && gen_out == "-") fmt = "json";
      return cmd_gen(gen_n, gen_d, gen_seed, gen_shape, gen_out, fmt);
    }
    if (app.got_subcommand(verify)) return cmd_verify(v_nmax, v_d, v_trials, v_seed);
    if (app.got_subcommand(bench)) return cmd_bench(b_sizes, b_seed);
  } catch (const DegeneracyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
