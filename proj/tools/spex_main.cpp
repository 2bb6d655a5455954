// spex: construct extremal planar families, compute spectral radii, run
// exhaustive forbidden-subgraph searches, and verify the structural
// properties behind them. One subcommand per invocation; see --help.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spex/canonical.hpp"
#include "spex/enumerate.hpp"
#include "spex/graph6.hpp"
#include "spex/patterns.hpp"
#include "spex/planarity.hpp"
#include "spex/report_json.hpp"
#include "spex/spectral.hpp"
#include "spex/theorems.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  double tol = 1e-10;
  double tie_tol = 1e-9;
  long max_iter = 1000000;
  int threads = 1;
  std::string format;
  std::string out_path;
  std::string config_path;
  bool timings = false;
};

int env_default_threads() {
  if (const char* env = std::getenv("SPEX_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

// key=value lines, '#' comments; flags given on the command line win
void apply_config_file(CommonOpts& opts, const CLI::App& cmd) {
  if (opts.config_path.empty()) return;
  std::ifstream in(opts.config_path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + opts.config_path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      auto end = s.find_last_not_of(" \t");
      s.erase(end == std::string::npos ? 0 : end + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto flag_given = [&](const std::string& name) {
      auto* opt = cmd.get_option_no_throw(name);
      return opt && opt->count() > 0;
    };
    if (key == "tol" && !flag_given("--tol")) opts.tol = std::stod(value);
    if (key == "tie_tol" && !flag_given("--tie-tol")) opts.tie_tol = std::stod(value);
    if (key == "threads" && !flag_given("--threads")) opts.threads = std::stoi(value);
    if (key == "max_iter" && !flag_given("--max-iter")) opts.max_iter = std::stol(value);
  }
}

void write_output(const CommonOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + opts.out_path);
  out << text;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--tol", opts.tol, "Eigen-residual tolerance");
  cmd->add_option("--tie-tol", opts.tie_tol, "Argmax tie tolerance");
  cmd->add_option("--max-iter", opts.max_iter, "Power-iteration cap");
  cmd->add_option("--threads", opts.threads, "Worker threads (search only)");
  cmd->add_option("--format", opts.format, "Output format");
  cmd->add_option("--out", opts.out_path, "Write output to a file");
  cmd->add_option("--config", opts.config_path, "key=value config file presetting tolerances");
  cmd->add_flag("--timings", opts.timings, "Include runtime fields in reports");
}

spex::SpectralOptions spectral_opts(const CommonOpts& c) {
  spex::SpectralOptions s;
  s.tolerance = c.tol;
  s.max_iterations = c.max_iter;
  return s;
}

spex::Graph build_family(const std::string& name, int n, int k) {
  if (name == "W") return spex::family_w(n, k);
  if (name == "F") return spex::family_f(n, k);
  if (name == "M") return spex::family_m(n, k);
  throw std::invalid_argument("unknown family '" + name + "' (expected W, F or M)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral extremal toolkit for planar graphs"};
  app.require_subcommand(1);

  // family
  auto* family_cmd = app.add_subcommand("family", "Construct W/F/M family graphs");
  CommonOpts family_opts;
  std::string family_name;
  int family_n = 0, family_k = 0;
  family_cmd->add_option("name", family_name, "Family: W, F or M")->required();
  family_cmd->add_option("--n", family_n, "Vertex count")->required();
  family_cmd->add_option("--k", family_k, "Family parameter")->required();
  add_common(family_cmd, family_opts);

  // rho
  auto* rho_cmd = app.add_subcommand("rho", "Spectral radius of graph6 inputs");
  CommonOpts rho_opts;
  std::string rho_g6, rho_in;
  rho_cmd->add_option("--g6", rho_g6, "Single graph6 string");
  rho_cmd->add_option("--in", rho_in, "File of graph6 lines (default: stdin)");
  add_common(rho_cmd, rho_opts);

  // search
  auto* search_cmd = app.add_subcommand("search", "Exhaustive spectral-extremal search");
  CommonOpts search_opts;
  int search_n = 0;
  std::string search_pattern;
  bool search_disconnected = false, search_dump_all = false;
  search_cmd->add_option("--n", search_n, "Vertex count (<= 11)")->required();
  search_cmd->add_option("--pattern", search_pattern,
                         "wheel:k | friendship:k | matching:m | g6:<string>")->required();
  search_cmd->add_flag("--include-disconnected", search_disconnected,
                       "Also report the best connected result on fewer vertices");
  search_cmd->add_flag("--dump-all", search_dump_all, "CSV row per examined graph");
  add_common(search_cmd, search_opts);

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "Generate graphs up to isomorphism");
  CommonOpts enum_opts;
  int enum_n = 0;
  std::string enum_pattern;
  bool enum_disconnected = false, enum_all_graphs = false, enum_force = false,
       enum_progress = false;
  long enum_limit = 0;
  enum_cmd->add_option("--n", enum_n, "Vertex count (<= 11)")->required();
  enum_cmd->add_option("--pattern", enum_pattern, "Emit only pattern-free graphs");
  enum_cmd->add_flag("--include-disconnected", enum_disconnected, "Drop the connectivity filter");
  enum_cmd->add_flag("--all-graphs", enum_all_graphs, "Drop the planarity filter");
  enum_cmd->add_flag("--force-large", enum_force, "Lift the n <= 11 cap (prints an estimate first)");
  enum_cmd->add_flag("--progress", enum_progress, "Line-buffered counter on stderr");
  enum_cmd->add_option("--limit", enum_limit, "Stop after this many graphs");
  add_common(enum_cmd, enum_opts);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Verify family properties or eigenvector windows");
  CommonOpts verify_opts;
  std::string verify_theorem, verify_g6;
  int verify_n = 0, verify_k = 0, verify_u1 = 0, verify_u2 = 1, verify_search_cap = 9;
  bool verify_window = false;
  verify_cmd->add_option("--theorem", verify_theorem, "T2, T3 or T4");
  verify_cmd->add_option("--n", verify_n, "Vertex count");
  verify_cmd->add_option("--k", verify_k, "Family parameter");
  verify_cmd->add_option("--search-cap", verify_search_cap,
                         "Run the exhaustive search when n <= cap");
  verify_cmd->add_flag("--window", verify_window, "Check the eigenvector window instead");
  verify_cmd->add_option("--g6", verify_g6, "Graph for --window");
  verify_cmd->add_option("--u1", verify_u1, "First hub for --window");
  verify_cmd->add_option("--u2", verify_u2, "Second hub for --window");
  add_common(verify_cmd, verify_opts);

  // transform
  auto* transform_cmd = app.add_subcommand("transform", "Path-system transformations");
  CommonOpts transform_opts;
  std::string transform_parts, transform_target;
  int transform_s1 = 0, transform_s2 = 0;
  bool transform_rho = false;
  transform_cmd->add_option("--parts", transform_parts, "Path orders, e.g. 3,2,1")->required();
  transform_cmd->add_option("--s1", transform_s1, "Larger component order");
  transform_cmd->add_option("--s2", transform_s2, "Smaller component order");
  transform_cmd->add_option("--target", transform_target,
                            "Find a transformation sequence to this path system");
  transform_cmd->add_flag("--rho", transform_rho,
                          "Compare rho of K_2+H before and after the step");
  add_common(transform_cmd, transform_opts);

  // witness
  auto* witness_cmd = app.add_subcommand("witness", "Two-hub structure decomposition");
  CommonOpts witness_opts;
  std::string witness_g6, witness_family;
  int witness_n = 0, witness_k = 0;
  witness_cmd->add_option("--g6", witness_g6, "Graph to decompose");
  witness_cmd->add_option("--family", witness_family, "Build a family graph instead (W/F/M)");
  witness_cmd->add_option("--n", witness_n, "Vertex count for --family");
  witness_cmd->add_option("--k", witness_k, "Parameter for --family");
  add_common(witness_cmd, witness_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (family_cmd->parsed()) {
      apply_config_file(family_opts, *family_cmd);
      spex::Graph g = build_family(family_name, family_n, family_k);
      std::string fmt = family_opts.format.empty() ? "g6" : family_opts.format;
      if (fmt == "g6") {
        write_output(family_opts, spex::to_graph6(g) + "\n");
      } else if (fmt == "json") {
        json j;
        j["family"] = family_name;
        j["n"] = family_n;
        j["k"] = family_k;
        j["g6"] = spex::to_graph6(g);
        j["edges"] = g.edge_count();
        write_output(family_opts, j.dump() + "\n");
      } else if (fmt == "text") {
        std::ostringstream os;
        os << family_name << "(" << family_n << "," << family_k
           << "): " << g.vertex_count() << " vertices, " << g.edge_count()
           << " edges, " << spex::to_graph6(g) << "\n";
        write_output(family_opts, os.str());
      } else {
        throw std::invalid_argument("unknown format '" + fmt + "'");
      }
      return 0;
    }

    if (rho_cmd->parsed()) {
      apply_config_file(rho_opts, *rho_cmd);
      std::vector<std::string> lines;
      if (!rho_g6.empty()) {
        lines.push_back(rho_g6);
      } else {
        std::istream* in = &std::cin;
        std::ifstream file;
        if (!rho_in.empty()) {
          file.open(rho_in);
          if (!file) throw std::runtime_error("cannot open " + rho_in);
          in = &file;
        }
        std::string line;
        while (std::getline(*in, line))
          if (!line.empty()) lines.push_back(line);
      }
      std::string fmt = rho_opts.format.empty() ? "text" : rho_opts.format;
      std::ostringstream os;
      json arr = json::array();
      for (const auto& line : lines) {
        spex::Graph g = spex::from_graph6(line);
        spex::SpectrumResult s = spex::spectral_radius(g, spectral_opts(rho_opts));
        if (fmt == "text") {
          os << spex::format12(s.rho) << "\n";
        } else if (fmt == "csv") {
          os << line << "," << spex::format12(s.rho) << "\n";
        } else if (fmt == "json") {
          json j;
          j["g6"] = line;
          j["rho"] = spex::round12(s.rho);
          j["residual"] = s.residual;
          j["iterations"] = s.iterations;
          arr.push_back(j);
        } else {
          throw std::invalid_argument("unknown format '" + fmt + "'");
        }
      }
      if (fmt == "json") os << arr.dump() << "\n";
      write_output(rho_opts, os.str());
      return 0;
    }

    if (search_cmd->parsed()) {
      apply_config_file(search_opts, *search_cmd);
      if (search_opts.threads < 1) search_opts.threads = env_default_threads();
      spex::ForbiddenPattern pattern = spex::ForbiddenPattern::parse(search_pattern);
      spex::SearchOptions sopts;
      sopts.tie_tolerance = search_opts.tie_tol;
      sopts.threads = search_cmd->get_option("--threads")->count() > 0
                          ? search_opts.threads
                          : env_default_threads();
      sopts.include_disconnected = search_disconnected;
      sopts.spectral = spectral_opts(search_opts);
      std::ostringstream csv;
      if (search_dump_all) {
        csv << "graph6,rho\n";
        sopts.threads = 1;  // serialized delivery keeps the dump ordered
        sopts.per_graph = [&](const spex::Graph& g, double rho) {
          csv << spex::to_graph6(g) << "," << spex::format12(rho) << "\n";
        };
      }
      spex::SearchReport report = spex::spex_search(search_n, pattern, sopts);
      std::string fmt = search_opts.format.empty() ? "json" : search_opts.format;
      if (fmt == "csv" && search_dump_all) {
        write_output(search_opts, csv.str());
      } else if (fmt == "json") {
        write_output(search_opts,
                     spex::to_json_string(report, search_opts.timings) + "\n");
      } else {
        throw std::invalid_argument("unknown format '" + fmt + "' for search");
      }
      return 0;
    }

    if (enum_cmd->parsed()) {
      apply_config_file(enum_opts, *enum_cmd);
      spex::EnumerationConfig cfg;
      cfg.n = enum_n;
      cfg.connected_only = !enum_disconnected;
      cfg.planar_only = !enum_all_graphs;
      cfg.allow_large = enum_force;
      if (!enum_pattern.empty())
        cfg.pattern = spex::ForbiddenPattern::parse(enum_pattern);
      if (enum_limit > 0) cfg.limit = enum_limit;
      if (enum_force && enum_n > 11) {
        long est = spex::estimated_class_count(enum_n);
        std::cerr << "estimated connected planar classes at n=" << enum_n << ": "
                  << (est < 0 ? std::string("unknown") : std::to_string(est)) << "\n";
      }
      std::ostringstream os;
      long count = 0;
      spex::enumerate_graphs(cfg, [&](const spex::Graph& g) {
        os << spex::to_graph6(g) << "\n";
        ++count;
        if (enum_progress && count % 10000 == 0)
          std::cerr << count << " graphs\n";
        return true;
      });
      write_output(enum_opts, os.str());
      if (enum_progress) std::cerr << count << " graphs total\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      apply_config_file(verify_opts, *verify_cmd);
      if (verify_window) {
        if (verify_g6.empty())
          throw std::invalid_argument("--window requires --g6");
        spex::Graph g = spex::from_graph6(verify_g6);
        spex::EigenWindowReport rep =
            spex::eigen_window_check(g, verify_u1, verify_u2, verify_opts.tie_tol);
        write_output(verify_opts, spex::to_json_string(rep, 2) + "\n");
        return rep.hubs_at_one ? 0 : 1;
      }
      spex::TheoremId which;
      if (verify_theorem == "T2") which = spex::TheoremId::T2;
      else if (verify_theorem == "T3") which = spex::TheoremId::T3;
      else if (verify_theorem == "T4") which = spex::TheoremId::T4;
      else throw std::invalid_argument("bad --theorem '" + verify_theorem +
                                       "' (expected T2, T3 or T4)");
      spex::VerifyOptions vopts;
      vopts.search_cap = verify_search_cap;
      vopts.spectral = spectral_opts(verify_opts);
      vopts.search.tie_tolerance = verify_opts.tie_tol;
      vopts.search.spectral = vopts.spectral;
      spex::TheoremReport rep = spex::verify_theorem(verify_n, verify_k, which, vopts);
      write_output(verify_opts,
                   spex::to_json_string(rep, verify_opts.timings, 2) + "\n");
      return rep.hard_assertions_pass ? 0 : 1;
    }

    if (transform_cmd->parsed()) {
      apply_config_file(transform_opts, *transform_cmd);
      spex::PathSystem h = spex::PathSystem::parse(transform_parts);
      if (!transform_target.empty()) {
        spex::PathSystem target = spex::PathSystem::parse(transform_target);
        auto steps = spex::transformation_path(h, target);
        json j;
        j["from"] = h.parts();
        j["target"] = target.parts();
        if (steps) {
          json arr = json::array();
          for (auto [s1, s2] : *steps) arr.push_back({{"s1", s1}, {"s2", s2}});
          j["steps"] = arr;
          j["found"] = true;
        } else {
          j["found"] = false;
        }
        write_output(transform_opts, j.dump() + "\n");
        return 0;
      }
      if (transform_s1 <= 0 || transform_s2 <= 0)
        throw std::invalid_argument("transform needs --s1 and --s2 (or --target)");
      spex::PathSystem result = spex::transform_path_system(h, transform_s1, transform_s2);
      json j;
      j["before"] = h.parts();
      j["after"] = result.parts();
      j["s1"] = transform_s1;
      j["s2"] = transform_s2;
      if (transform_rho) {
        spex::SpectralOptions sopts = spectral_opts(transform_opts);
        if (transform_cmd->get_option("--tol")->count() == 0) sopts.tolerance = 1e-12;
        spex::Lemma9Record rec =
            spex::verify_lemma9(h.total() + 2, h, transform_s1, transform_s2, sopts);
        j["rho_before"] = spex::round12(rec.rho_before);
        j["rho_after"] = spex::round12(rec.rho_after);
        j["strict_increase"] = rec.strict_increase;
      }
      write_output(transform_opts, j.dump() + "\n");
      return 0;
    }

    if (witness_cmd->parsed()) {
      apply_config_file(witness_opts, *witness_cmd);
      spex::Graph g;
      if (!witness_g6.empty()) {
        g = spex::from_graph6(witness_g6);
      } else if (!witness_family.empty()) {
        g = build_family(witness_family, witness_n, witness_k);
      } else {
        throw std::invalid_argument("witness needs --g6 or --family");
      }
      auto w = spex::structure_witness(g);
      if (w) {
        write_output(witness_opts, spex::to_json_string(*w, 2) + "\n");
      } else {
        write_output(witness_opts, "{\"found\":false}\n");
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const spex::Graph6ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
