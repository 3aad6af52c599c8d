// Command-line surface for the adderbound library. Thin sequential shell:
// every subcommand parses flags, calls one library entry point, and prints a
// fixed-format report. Exit codes: 0 success/verified, 1 verified-false,
// 2 usage, parse, domain, or budget errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adderbound/bounds.hpp"
#include "adderbound/codebook.hpp"
#include "adderbound/codebook_io.hpp"
#include "adderbound/pipeline.hpp"
#include "adderbound/sps.hpp"

namespace {

using namespace adderbound;

int g_exit = 0;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file: " + path);
  out << text;
}

std::string words_joined(const Codebook& c) {
  std::string s;
  for (word_t w : c.words()) {
    if (!s.empty()) s += ' ';
    s += word_to_string(w, c.length());
  }
  return s;
}

std::vector<int> parse_coord_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::domain_error("bad coordinate list: " + text);
    }
    if (pos != item.size() || v < 1) throw std::domain_error("bad coordinate list: " + text);
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::domain_error("bad r0 grid: " + text);
    }
    if (pos != item.size()) throw std::domain_error("bad r0 grid: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::domain_error("bad r0 grid: " + text);
  return out;
}

void add_bound_commands(CLI::App& app) {
  CLI::App* bound = app.add_subcommand("bound", "Capacity-region outer bounds");
  bound->require_subcommand(1);

  auto t1_r1 = std::make_shared<double>(0.0);
  CLI::App* t1 = bound->add_subcommand("theorem1", "Outer bound on R2 at a fixed R1");
  t1->add_option("--r1", *t1_r1, "first-user rate, in (0, 1]")->required();
  t1->callback([t1_r1] {
    BoundResult r = theorem1_bound(*t1_r1);
    std::printf("r1 = %.6f\n", *t1_r1);
    std::printf("shannon = %.6f\n", 1.5 - *t1_r1);
    std::printf("new_bound = %.6f\n", r.value);
    std::printf("alpha_star = %.6f\n", *r.arg_alpha);
    std::printf("eta_star = %.6f\n", r.arg_eta);
  });

  struct CurveOpts {
    double r1_min = 0.0, r1_max = 0.0;
    int steps = 0;
    std::string out;
  };
  auto co = std::make_shared<CurveOpts>();
  CLI::App* curve = bound->add_subcommand("curve", "Bound curve as CSV");
  curve->add_option("--r1-min", co->r1_min, "start of the r1 range")->required();
  curve->add_option("--r1-max", co->r1_max, "end of the r1 range")->required();
  curve->add_option("--steps", co->steps, "number of grid intervals")->required();
  curve->add_option("--out", co->out, "output CSV path (default stdout)");
  curve->callback([co] {
    if (co->steps < 1) throw std::domain_error("curve: steps must be >= 1");
    if (!(co->r1_min > 0.0 && co->r1_min < co->r1_max && co->r1_max <= 1.0)) {
      throw std::domain_error("curve: need 0 < r1-min < r1-max <= 1");
    }
    std::string csv = "r1,shannon,new_bound,alpha_star,eta_star\n";
    for (int i = 0; i <= co->steps; ++i) {
      double r1 = i == co->steps
                      ? co->r1_max
                      : co->r1_min + (co->r1_max - co->r1_min) * i / co->steps;
      BoundResult r = theorem1_bound(r1);
      char line[160];
      std::snprintf(line, sizeof line, "%.6f,%.6f,%.10f,%.10f,%.10f\n", r1, 1.5 - r1, r.value,
                    *r.arg_alpha, r.arg_eta);
      csv += line;
    }
    if (co->out.empty()) {
      std::fputs(csv.c_str(), stdout);
    } else {
      write_text(co->out, csv);
    }
  });

  auto sw_r0 = std::make_shared<double>(0.0);
  CLI::App* sumsw = bound->add_subcommand("sumsw", "Common-message sum-rate bound at r1 = 0");
  sumsw->add_option("--r0", *sw_r0, "common-message rate, >= 0")->required();
  sumsw->callback([sw_r0] {
    BoundResult r = sumsw_bound(*sw_r0);
    std::printf("r0 = %.6f\n", *sw_r0);
    std::printf("value = %.6f\n", r.value);
    std::printf("eta_star = %.6f\n", r.arg_eta);
  });

  struct RsOpts {
    double r0 = 0.0, r1 = 0.0;
  };
  auto rs = std::make_shared<RsOpts>();
  CLI::App* rsigma = bound->add_subcommand("rsigma", "Common-message sum-rate bound");
  rsigma->add_option("--r0", rs->r0, "common-message rate, >= 0")->required();
  rsigma->add_option("--r1", rs->r1, "first-user rate, in [0, 1]")->required();
  rsigma->callback([rs] {
    BoundResult r = r_sigma(rs->r0, rs->r1);
    std::printf("r0 = %.6f\n", rs->r0);
    std::printf("r1 = %.6f\n", rs->r1);
    std::printf("value = %.6f\n", r.value);
    std::printf("eta_star = %.6f\n", r.arg_eta);
  });
}

void add_verify_command(CLI::App& app) {
  struct VerifyOpts {
    std::vector<std::string> files;
    bool system = false;
  };
  auto vo = std::make_shared<VerifyOpts>();
  CLI::App* verify = app.add_subcommand("verify", "Check the zero-error property of a pair or system");
  verify->add_option("files", vo->files, "one pair/system file, or two codebook files")
      ->expected(1, 2);
  verify->add_flag("--system", vo->system, "treat the single input file as a system file");
  verify->callback([vo] {
    if (vo->system) {
      if (vo->files.size() != 1) throw std::domain_error("verify --system takes exactly one file");
      std::vector<ZeroErrorSystem> systems = parse_systems(read_file(vo->files[0]));
      std::printf("systems = %zu\n", systems.size());
      for (std::size_t i = 0; i < systems.size(); ++i) {
        SystemVerdict v = is_zero_error_system(systems[i]);
        if (!v.ok) {
          std::printf("COLLISION\n");
          int n = static_cast<int>(systems[i].pairs.front().first.length());
          std::printf("system %zu: pair %d x pair %d, sum = %s\n", i + 1, v.pair_i + 1,
                      v.pair_j + 1, ternary_to_string(v.sum, n).c_str());
          g_exit = 1;
          return;
        }
      }
      std::printf("ZERO-ERROR-SYSTEM\n");
      return;
    }
    Codebook c1 = [&] {
      if (vo->files.size() == 2) return parse_codebook(read_file(vo->files[0]));
      std::vector<Codebook> blocks = parse_codebook_blocks(read_file(vo->files[0]));
      if (blocks.size() != 2) throw std::domain_error("verify: expected exactly two codebooks");
      return blocks[0];
    }();
    Codebook c2 = vo->files.size() == 2
                      ? parse_codebook(read_file(vo->files[1]))
                      : parse_codebook_blocks(read_file(vo->files[0]))[1];
    PairVerdict v = is_zero_error_pair(c1, c2);
    std::printf("n = %d\n", c1.length());
    std::printf("|C1| = %zu\n", c1.size());
    std::printf("|C2| = %zu\n", c2.size());
    if (v.zero_error) {
      std::printf("ZERO-ERROR\n");
      double sum_rate =
          std::log2(static_cast<double>(c1.size()) * static_cast<double>(c2.size())) / c1.length();
      std::printf("sum-rate = %.5f\n", sum_rate);
    } else {
      std::printf("COLLISION\n");
      int n = c1.length();
      std::printf("witness: %s + %s = %s + %s\n", word_to_string(v.witness->a, n).c_str(),
                  word_to_string(v.witness->b, n).c_str(),
                  word_to_string(v.witness->a2, n).c_str(),
                  word_to_string(v.witness->b2, n).c_str());
      g_exit = 1;
    }
  });
}

void add_analyze_commands(CLI::App& app) {
  CLI::App* analyze = app.add_subcommand("analyze", "Shattering and cardinality-bound reports");
  analyze->require_subcommand(1);

  struct VcOpts {
    std::string file;
    int k = 1;
  };
  auto vc = std::make_shared<VcOpts>();
  CLI::App* vcdim = analyze->add_subcommand("vcdim", "Largest k-shattered coordinate set");
  vcdim->add_option("file", vc->file, "codebook file")->required();
  vcdim->add_option("--k", vc->k, "required multiplicity (default 1)");
  vcdim->callback([vc] {
    Codebook c = parse_codebook(read_file(vc->file));
    ShatterResult r = max_k_shattered(c, vc->k);
    std::printf("n = %d\n", c.length());
    std::printf("|C| = %zu\n", c.size());
    std::printf("k = %d\n", vc->k);
    std::printf("vcdim = %d\n", r.size);
    std::printf("witness = %s\n", coordset_to_string(r.witness).c_str());
  });

  struct SpsOpts {
    std::string file;
    int d = 0, k = 0;
  };
  auto so = std::make_shared<SpsOpts>();
  CLI::App* sps = analyze->add_subcommand("sps", "Cardinality bound for k-shattering-free codebooks");
  sps->add_option("file", so->file, "codebook file")->required();
  sps->add_option("--d", so->d, "forbidden k-shattered set size")->required();
  sps->add_option("--k", so->k, "multiplicity")->required();
  sps->callback([so] {
    Codebook c = parse_codebook(read_file(so->file));
    SoftSpsResult r = soft_sps_bound({c.length(), so->d, so->k});
    std::printf("n = %d\n", c.length());
    std::printf("|C| = %zu\n", c.size());
    std::printf("d = %d\n", so->d);
    std::printf("k = %d\n", so->k);
    std::printf("t_star = %d\n", r.t_star);
    std::printf("bound_exact = %s\n", r.bound.str().c_str());
    std::printf("bound = %s\n", r.floor_bound().str().c_str());
    bool pass = bigrat(static_cast<long long>(c.size())) <= r.bound;
    std::printf("%s\n", pass ? "PASS" : "FAIL");
    if (!pass) g_exit = 1;
  });

  struct ShiftOpts {
    std::string file;
    std::string out;
  };
  auto sh = std::make_shared<ShiftOpts>();
  CLI::App* shift = analyze->add_subcommand("shift", "Compress a set family to a monotone one");
  shift->add_option("file", sh->file, "family file (codebook format)")->required();
  shift->add_option("--out", sh->out, "output path (default stdout)");
  shift->callback([sh] {
    SubsetFamily f = family_from_codebook(parse_codebook(read_file(sh->file)));
    SubsetFamily g = shift_to_monotone(f);
    std::string text = serialize_codebook(family_to_codebook(g));
    if (sh->out.empty()) {
      std::fputs(text.c_str(), stdout);
    } else {
      write_text(sh->out, text);
    }
  });
}

void add_search_command(CLI::App& app) {
  struct SearchOpts {
    int n = 0;
    long long budget_ms = 0;
    bool canonical = false;
  };
  auto so = std::make_shared<SearchOpts>();
  CLI::App* search = app.add_subcommand("search", "Exhaustive best zero-error pair at blocklength n");
  search->add_option("--n", so->n, "blocklength, 1..6")->required();
  search->add_option("--budget-ms", so->budget_ms, "time budget (required for n >= 5)");
  search->add_flag("--canonical", so->canonical, "deduplicate witnesses up to coordinate permutation");
  search->callback([so] {
    SearchOptions opts;
    opts.budget_ms = so->budget_ms;
    opts.canonical = so->canonical;
    SearchResult r = exhaustive_max_pair(so->n, opts);
    std::printf("n = %d\n", r.n);
    std::printf("best_product = %lld\n", r.best_product);
    std::printf("witnesses = %zu\n", r.witnesses.size());
    std::size_t shown = std::min<std::size_t>(r.witnesses.size(), 64);
    for (std::size_t i = 0; i < shown; ++i) {
      std::printf("pair: %s x %s\n", words_joined(r.witnesses[i].first).c_str(),
                  words_joined(r.witnesses[i].second).c_str());
    }
    if (shown < r.witnesses.size()) {
      std::printf("... (%zu more)\n", r.witnesses.size() - shown);
    }
  });
}

void add_validate_command(CLI::App& app) {
  CLI::App* validate = app.add_subcommand("validate", "Randomized library self-checks");
  validate->require_subcommand(1);

  struct LswOpts {
    long trials = 10000;
    std::uint64_t seed = 0;
    std::string grid;
  };
  auto lo = std::make_shared<LswOpts>();
  CLI::App* lsw = validate->add_subcommand(
      "lemma-sw", "Entropy-characterization soundness over random distributions");
  lsw->add_option("--trials", lo->trials, "number of sampled distributions (default 10000)");
  lsw->add_option("--seed", lo->seed, "RNG seed (default 0)");
  lsw->add_option("--r0-grid", lo->grid, "comma-separated r0 values (default 0,0.05,...,0.5)");
  lsw->callback([lo] {
    std::vector<double> grid;
    if (lo->grid.empty()) {
      for (int i = 0; i <= 10; ++i) grid.push_back(0.05 * i);
    } else {
      grid = parse_double_list(lo->grid);
    }
    LemmaSwReport rep = validate_lemma_sw(lo->trials, grid, lo->seed);
    std::printf("trials: %ld\n", rep.trials);
    std::printf("seed: %llu\n", static_cast<unsigned long long>(lo->seed));
    std::printf("r0 grid: %zu points\n", grid.size());
    std::printf("violations: %ld\n", rep.violations);
    std::printf("max slack: %.6e\n", rep.max_slack);
    if (rep.worst) {
      std::printf("worst: r0 = %.6f, sum = %.6f, bound = %.6f\n", rep.worst->r0, rep.worst->sum,
                  rep.worst->bound);
    }
    if (rep.violations > 0) g_exit = 1;
  });
}

void add_construct_command(CLI::App& app) {
  struct ConOpts {
    std::string s;
    std::vector<std::string> files;
    std::string system_out;
  };
  auto co = std::make_shared<ConOpts>();
  CLI::App* con = app.add_subcommand("construct", "Build a zero-error system from a pair");
  con->add_option("--s", co->s, "coordinate set, e.g. 1,3")->required();
  con->add_option("files", co->files, "two codebook files")->expected(2);
  con->add_option("--system-out", co->system_out, "write the system file here");
  con->callback([co] {
    Codebook c1 = parse_codebook(read_file(co->files[0]));
    Codebook c2 = parse_codebook(read_file(co->files[1]));
    CoordSet s = CoordSet::from_indices(c1.length(), parse_coord_list(co->s));
    ConstructionReport rep = build_system(c1, c2, s);
    std::printf("s = %s\n", coordset_to_string(rep.s).c_str());
    std::printf("k = %d\n", rep.k);
    std::printf("k_prime_log = %d\n", rep.k_prime_log);
    std::printf("|G| = %zu\n", rep.g_set.size());
    std::printf("pairs = %zu\n", rep.system.m0());
    std::printf("m1 = %zu\n", rep.system.m1());
    std::printf("m2 = %zu\n", rep.system.m2());
    std::printf("mass = %lld\n", rep.mass);
    std::printf("mass_lower_bound = %.6f\n", rep.mass_lower_bound);
    std::printf("mass_ok = %s\n", rep.mass_bound_ok ? "yes" : "no");
    SystemVerdict v = is_zero_error_system(rep.system);
    std::printf("%s\n", v.ok ? "ZERO-ERROR-SYSTEM" : "COLLISION");
    if (!v.ok) g_exit = 1;
    if (!co->system_out.empty()) write_text(co->system_out, serialize_system(rep.system));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-error capacity bounds and codebook combinatorics for the two-user binary adder channel"};
  app.require_subcommand(1);
  add_bound_commands(app);
  add_verify_command(app);
  add_analyze_commands(app);
  add_search_command(app);
  add_validate_command(app);
  add_construct_command(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
