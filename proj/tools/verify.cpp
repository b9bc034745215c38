// Command-line runner: executes verification suites for X(osp_{N|2m}) and
// emits machine-readable reports.
//
// Exit codes: 0 all requested checks pass; 1 suite failure; 2 configuration
// error; 3 representation-validation failure (with --rep-check on).

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "osp/relcheck.hpp"

namespace {

using namespace osp;

const std::vector<std::string> kSymbolicSuites = {
    "rmatrix",      "engine",       "gauss",
    "center",       "h_relations",  "drinfeld_extended",
    "main_theorem", "embedding",    "hopf_free"};

SuiteReport run_one(const std::string& id, Engine& en, int K, unsigned seed) {
  const SuperSpace& sp = en.space();
  if (id == "rmatrix") return suite_rmatrix(sp, K, seed);
  if (id == "engine") return suite_engine(en, K, seed);
  if (id == "gauss") return suite_gauss(en, K, seed);
  if (id == "center") return suite_center(en, K, seed);
  if (id == "h_relations") return suite_h_relations(en, K, seed);
  if (id == "drinfeld_extended") return suite_drinfeld_extended(en, K, seed);
  if (id == "main_theorem") return suite_main_theorem(en, K, seed);
  if (id == "embedding") return suite_embedding(en, K, seed);
  if (id == "hopf_free") return suite_hopf_free(en, K, seed);
  if (id == "evalrep") return suite_evalrep(en, K, seed);
  if (id == "negative_controls") return suite_negative_controls(sp, K, seed);
  throw std::invalid_argument("unknown suite id: " + id);
}

// Atomic file write: stage to a sibling temp path, then rename.
void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename report into place: " + path);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void dump_gaussian_series(std::ostream& os, Engine& en, int K) {
  GaussData g = gauss_data(en, K);
  const SuperSpace& sp = en.space();
  int d = sp.size();
  auto line = [&](const std::string& name, const TruncSeries& s) {
    for (int r = 0; r <= s.K; ++r)
      os << name << "[" << r << "] = " << poly_str(s.c[r]) << "\n";
  };
  for (int i = 1; i <= d; ++i) line("h_" + std::to_string(i), g.h(i));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      line("e_" + std::to_string(i) + "_" + std::to_string(j), g.e(i, j));
      line("f_" + std::to_string(j) + "_" + std::to_string(i), g.f(j, i));
    }
  Currents cur = build_currents(en, K);
  for (int i = 1; i <= sp.num_currents(); ++i) {
    std::string s = std::to_string(i);
    line("k_" + s, cur.k[i]);
    line("e_" + s, cur.e[i]);
    line("f_" + s, cur.f[i]);
    line("kappa_" + s, cur.kap[i]);
    line("xi+_" + s, cur.xip[i]);
    line("xi-_" + s, cur.xim[i]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the extended orthosymplectic Yangian"};
  app.require_subcommand(0, 1);

  int N = 0, m = 0, K = 3, threads = 1;
  unsigned long long seed = 42;
  std::string suites = "all", out_path, format = "json";
  std::string rep_check = "on", mutation_controls = "off";
  bool timing = false;

  app.add_option("--N", N, "First parameter N of osp_{N|2m} (N >= 3)")
      ->required();
  app.add_option("--m", m, "Symplectic rank m (m >= 1)")->required();
  app.add_option("--K", K, "Series truncation order (default 3)");
  app.add_option("--suites", suites,
                 "Comma-separated suite ids, or 'all' (default)");
  app.add_option("--seed", seed, "Seed for randomized spot checks");
  app.add_option("--rep-check", rep_check,
                 "on|off: evaluation-representation cross-check (default on)");
  app.add_option("--mutation-controls", mutation_controls,
                 "on|off: run negative-control mutations (default off)");
  app.add_option("--out", out_path, "Report output path (default: stdout)");
  app.add_option("--format", format, "json|markdown (default json)");
  app.add_option("--threads", threads, "Suite-level parallelism (default 1)");
  app.add_flag("--timing", timing,
               "Include wall-clock millis in reports (off for determinism)");

  CLI::App* dump = app.add_subcommand(
      "dump-tables", "Write the commutator table and Gaussian series");
  dump->fallthrough();  // accept parent options (e.g. --out) after the name

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (N < 3 || m < 1) {
    std::cerr << "configuration error: require N >= 3 and m >= 1 "
              << "(got N=" << N << ", m=" << m << ")\n";
    return 2;
  }
  if (K < 1 || K > 6) {
    std::cerr << "configuration error: K must be in 1..6 (got " << K << ")\n";
    return 2;
  }
  if (format != "json" && format != "markdown") {
    std::cerr << "configuration error: --format must be json or markdown\n";
    return 2;
  }
  if ((rep_check != "on" && rep_check != "off") ||
      (mutation_controls != "on" && mutation_controls != "off")) {
    std::cerr << "configuration error: --rep-check/--mutation-controls "
              << "take on|off\n";
    return 2;
  }
  if (threads < 1) threads = 1;

  SuperSpace sp(N, m);

  if (dump->parsed()) {
    Engine en(sp);
    std::ostringstream os;
    os << en.dump_table(K);
    dump_gaussian_series(os, en, K);
    try {
      if (out_path.empty())
        std::cout << os.str();
      else
        write_atomic(out_path, os.str());
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    return 0;
  }

  std::vector<std::string> ids;
  if (suites == "all") {
    ids = kSymbolicSuites;
  } else {
    ids = split_commas(suites);
    for (const auto& id : ids) {
      bool known = id == "evalrep" || id == "negative_controls";
      for (const auto& k : kSymbolicSuites) known = known || id == k;
      if (!known) {
        std::cerr << "configuration error: unknown suite '" << id << "'\n";
        return 2;
      }
    }
  }
  if (rep_check == "on" &&
      std::find(ids.begin(), ids.end(), "evalrep") == ids.end())
    ids.push_back("evalrep");
  if (mutation_controls == "on" &&
      std::find(ids.begin(), ids.end(), "negative_controls") == ids.end())
    ids.push_back("negative_controls");

  // The representation gate is validated up front when rep-check is on;
  // a gate failure is a representation-validation error (exit 3).
  if (rep_check == "on") {
    EvalRep rep(sp, rat(1, 5), Mutation::none);
    if (!rep.rtt_gate((unsigned)seed, 10)) {
      std::cerr << "representation validation failed: the RTT gate of the "
                << "evaluation assignment does not hold\n";
      return 3;
    }
  }

  std::vector<SuiteReport> reports(ids.size());
  try {
    if (threads <= 1) {
      Engine en(sp);
      for (size_t i = 0; i < ids.size(); ++i)
        reports[i] = run_one(ids[i], en, K, (unsigned)seed);
    } else {
      // Each worker owns an engine; results are slotted by index so that
      // output order (and bytes) are independent of scheduling.
      std::vector<std::future<SuiteReport>> futs(ids.size());
      size_t next = 0;
      while (next < ids.size()) {
        size_t batch = std::min<size_t>(threads, ids.size() - next);
        for (size_t b = 0; b < batch; ++b)
          futs[next + b] =
              std::async(std::launch::async, [&, idx = next + b] {
                Engine en(sp);
                return run_one(ids[idx], en, K, (unsigned)seed);
              });
        for (size_t b = 0; b < batch; ++b)
          reports[next + b] = futs[next + b].get();
        next += batch;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error while running suites: " << e.what() << "\n";
    return 2;
  }

  std::string rendered = format == "json" ? render_json(reports, timing)
                                          : render_markdown(reports, timing);
  try {
    if (out_path.empty())
      std::cout << rendered;
    else
      write_atomic(out_path, rendered);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  bool rep_failed = false, any_failed = false;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (!reports[i].passed()) {
      any_failed = true;
      if (ids[i] == "evalrep") rep_failed = true;
    }
  }
  if (rep_failed && rep_check == "on") return 3;
  return any_failed ? 1 : 0;
}
