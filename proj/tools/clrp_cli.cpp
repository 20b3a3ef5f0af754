// Command-line front end. Exit codes: 0 = yes, 1 = no, 2 = inconclusive,
// 3 = input error, other codes >2 = usage errors from flag parsing. Stdout is
// deterministic (no wall times); timing goes to stderr under --verbose.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clrp/catalog.hpp"
#include "clrp/engine.hpp"
#include "clrp/io.hpp"
#include "clrp/nc_transform.hpp"
#include "clrp/rate_region.hpp"

namespace {

using clrp::error;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Instance arguments name either a file on disk or a built-in catalog entry.
std::string load_text(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_file(arg);
  if (clrp::catalog::has_entry(arg)) return clrp::catalog::dump(arg);
  throw error("no such file or catalog entry: " + arg);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
        ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw error(std::string(what) + ": expected a comma-separated integer list, got '" +
                  text + "'");
    }
  }
  if (out.empty())
    throw error(std::string(what) + ": expected a comma-separated integer list");
  return out;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write file: " + path);
  out << text;
}

int verdict_exit(clrp::Verdict v) {
  switch (v) {
    case clrp::Verdict::yes: return 0;
    case clrp::Verdict::no: return 1;
    case clrp::Verdict::inconclusive: return 2;
  }
  return 3;
}

/// Flags shared by every prover subcommand.
struct CommonFlags {
  int q = 2;
  bool json = false;
  bool verbose = false;
  std::string stats_path;
  std::uint64_t max_reps = 0;
  double timeout = 0.0;
  int jobs = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("-q,--field", q, "Field order (a prime power)")
        ->capture_default_str();
    cmd->add_flag("--json", json, "Emit a JSON result envelope instead of text");
    cmd->add_flag("-v,--verbose", verbose, "Print wall time and totals to stderr");
    cmd->add_option("--stats", stats_path, "Write the per-level statistics CSV here");
    cmd->add_option("--max-reps", max_reps,
                    "Abort a level once it holds this many representatives (0 = unlimited)");
    cmd->add_option("--timeout", timeout, "Wall-clock budget in seconds (0 = unlimited)");
    cmd->add_option("--jobs", jobs, "Worker hint for the ambient sweep")
        ->capture_default_str();
  }

  clrp::EngineOptions options() const {
    clrp::EngineOptions opt;
    opt.max_level_reps = max_reps;
    opt.max_seconds = timeout;
    opt.jobs = jobs;
    return opt;
  }
};

void emit_stats(const CommonFlags& flags, const std::vector<clrp::LevelStat>& stats) {
  if (!flags.stats_path.empty())
    write_out(flags.stats_path, clrp::format_stats_csv(stats));
}

int finish(const CommonFlags& flags, const clrp::ProverResult& res) {
  emit_stats(flags, res.stats);
  std::cout << (flags.json ? clrp::result_json(res) : clrp::format_report(res));
  if (flags.verbose)
    std::cerr << "wall: " << res.total_ms << " ms, rank evaluations: "
              << res.total_rank_evals << "\n";
  return verdict_exit(res.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prover for linear representability of constrained polymatroid classes"};
  app.require_subcommand(1);

  // prove-rate
  auto* rate_cmd = app.add_subcommand(
      "prove-rate", "Decide achievability of a rate vector on a coding network");
  std::string rate_instance, rate_list;
  bool ambient_all = false;
  CommonFlags rate_flags;
  rate_cmd->add_option("instance", rate_instance, "Network file or catalog name")
      ->required();
  rate_cmd->add_option("-r,--rates", rate_list, "Rates, one per message (e.g. 1,1,1)")
      ->required();
  rate_cmd->add_flag("--ambient-all", ambient_all,
                     "Bound the ambient dimension by the sum of all rates, "
                     "not only the source rates");
  rate_flags.attach(rate_cmd);

  // prove-region
  auto* region_cmd = app.add_subcommand(
      "prove-region", "Sweep every code of a network and report the achieved "
                      "singleton-rank vectors");
  std::string region_instance, emit_region;
  int dmax = 0, rmax = 0;
  CommonFlags region_flags;
  region_cmd->add_option("instance", region_instance, "Network file or catalog name")
      ->required();
  region_cmd->add_option("--dmax", dmax, "Largest singleton rank to sweep")
      ->required();
  region_cmd->add_option("--rmax", rmax, "Largest ambient dimension to sweep")
      ->required();
  region_cmd->add_option("--emit-region", emit_region,
                         "Write the region's H-representation here ('-' = stdout)");
  region_flags.attach(region_cmd);

  // prove-ss
  auto* ss_cmd = app.add_subcommand(
      "prove-ss", "Decide multi-linear realizability of an access structure");
  std::string ss_instance, ss_sizes;
  CommonFlags ss_flags;
  ss_cmd->add_option("instance", ss_instance, "Access-structure file or catalog name")
      ->required();
  ss_cmd->add_option("-s,--sizes", ss_sizes,
                     "Share sizes, dealer first (e.g. 2,2,3,3,2)")
      ->required();
  ss_flags.attach(ss_cmd);

  // prove-rep
  auto* rep_cmd = app.add_subcommand(
      "prove-rep", "Decide whether a rank vector is realizable by subspaces");
  std::string rep_instance;
  CommonFlags rep_flags;
  rep_cmd->add_option("instance", rep_instance,
                      "Rank-vector file (comma-separated) or catalog name")
      ->required();
  rep_flags.attach(rep_cmd);

  // transform
  auto* transform_cmd = app.add_subcommand(
      "transform", "Rewrite a network plus rates into a unit-demand multigraph");
  std::string transform_instance, transform_rates, transform_out;
  transform_cmd
      ->add_option("instance", transform_instance, "Network file or catalog name")
      ->required();
  transform_cmd
      ->add_option("-r,--rates", transform_rates, "Rates, one per message")
      ->required();
  transform_cmd->add_option("-o,--output", transform_out,
                            "Edge-list output path (default stdout)");

  // enumerate
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "List one representative per isomorphism class of a "
                   "constrained subspace-arrangement class");
  int enum_ground = 0;
  std::string enum_ambient, enum_ranks, enum_simple;
  CommonFlags enum_flags;
  enum_cmd->add_option("-n,--ground", enum_ground, "Ground-set size")->required();
  enum_cmd->add_option("-a,--ambient", enum_ambient,
                       "Ambient dimension window, 'lo' or 'lo,hi'")
      ->required();
  enum_cmd->add_option("-k,--ranks", enum_ranks,
                       "Admissible singleton ranks (e.g. 0,1,2)")
      ->required();
  enum_cmd->add_option("--simple", enum_simple,
                       "Window for the number of parallel classes, 'lo,hi' "
                       "(default 0,N)");
  enum_flags.attach(enum_cmd);

  // catalog
  auto* catalog_cmd = app.add_subcommand(
      "catalog", "List the built-in instances, or dump one by name");
  std::string catalog_name, catalog_out;
  catalog_cmd->add_option("name", catalog_name, "Entry to dump");
  catalog_cmd->add_option("-o,--output", catalog_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);

    if (*rate_cmd) {
      const clrp::NetworkInstance net = clrp::parse_network(load_text(rate_instance));
      const std::vector<int> rates = parse_int_list(rate_list, "rates");
      return finish(rate_flags,
                    clrp::prove_rate(net, rates, rate_flags.q, ambient_all,
                                     rate_flags.options()));
    }

    if (*region_cmd) {
      const clrp::NetworkInstance net =
          clrp::parse_network(load_text(region_instance));
      const clrp::RegionResult res =
          clrp::prove_region(net, region_flags.q, dmax, rmax, region_flags.options());
      emit_stats(region_flags, res.stats);
      std::cout << (region_flags.json ? clrp::region_json(res)
                                      : clrp::format_region_report(res));
      if (!emit_region.empty()) {
        const std::vector<clrp::Row> gens =
            clrp::augment_rate_rows(res.vectors, net.k, net.N);
        write_out(emit_region, clrp::format_hrep(clrp::conic_hull_hrep(gens, net.N)));
      }
      if (region_flags.verbose)
        std::cerr << "wall: " << res.total_ms << " ms, rank evaluations: "
                  << res.total_rank_evals << "\n";
      return verdict_exit(res.verdict);
    }

    if (*ss_cmd) {
      const clrp::AccessStructure gamma =
          clrp::parse_access_structure(load_text(ss_instance));
      const std::vector<int> sizes = parse_int_list(ss_sizes, "sizes");
      return finish(ss_flags,
                    clrp::prove_ss(gamma, sizes, ss_flags.q, ss_flags.options()));
    }

    if (*rep_cmd) {
      const clrp::RankVector h = clrp::parse_rank_vector(load_text(rep_instance));
      return finish(rep_flags, clrp::prove_rep(h, rep_flags.q, rep_flags.options()));
    }

    if (*transform_cmd) {
      const clrp::NetworkInstance net =
          clrp::parse_network(load_text(transform_instance));
      const std::vector<int> rates = parse_int_list(transform_rates, "rates");
      const clrp::MultigraphInstance g = clrp::transform(net, rates);
      clrp::validate_transform(g);
      write_out(transform_out, clrp::format_edge_list(g));
      return 0;
    }

    if (*enum_cmd) {
      const std::vector<int> ambient = parse_int_list(enum_ambient, "ambient");
      if (ambient.size() > 2) throw error("ambient: expected 'lo' or 'lo,hi'");
      const std::vector<int> K = parse_int_list(enum_ranks, "ranks");
      std::vector<int> simple = {0, enum_ground};
      if (!enum_simple.empty()) {
        simple = parse_int_list(enum_simple, "simple");
        if (simple.size() > 2) throw error("simple: expected 'lo' or 'lo,hi'");
      }
      clrp::ClassTuple c;
      c.N = enum_ground;
      c.r_l = ambient.front();
      c.r_u = ambient.back();
      c.K = K;
      c.s_l = simple.front();
      c.s_u = simple.back();
      c.validate();
      const clrp::EnumerateResult res = clrp::clrp_enumerate(c, enum_flags.q,
                                                             enum_flags.options());
      emit_stats(enum_flags, res.stats);
      for (const clrp::PolymatroidRep& rep : res.reps)
        std::cout << clrp::catalog_line(rep) << "\n";
      if (!res.note.empty()) std::cerr << "note: " << res.note << "\n";
      return verdict_exit(res.verdict);
    }

    if (*catalog_cmd) {
      if (catalog_name.empty()) {
        std::ostringstream os;
        for (const std::string& n : clrp::catalog::network_names())
          os << "network " << n << "\n";
        for (const std::string& n : clrp::catalog::access_names())
          os << "access " << n << "\n";
        for (const std::string& n : clrp::catalog::rank_vector_names())
          os << "rank-vector " << n << "\n";
        write_out(catalog_out, os.str());
      } else {
        write_out(catalog_out, clrp::catalog::dump(catalog_name));
      }
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 3;
}
