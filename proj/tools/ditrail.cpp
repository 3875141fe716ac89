// ditrail: workbench CLI for closed ditrails through prescribed vertex
// sets: hypothesis checks, exact oracles, constructive search, instance
// generation, and boundary hunting. Reports are JSON on stdout.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ditrail/connectivity.hpp"
#include "ditrail/constructor.hpp"
#include "ditrail/digraph.hpp"
#include "ditrail/errors.hpp"
#include "ditrail/generators.hpp"
#include "ditrail/io.hpp"
#include "ditrail/matching.hpp"
#include "ditrail/oracles.hpp"
#include "ditrail/theorems.hpp"
#include "ditrail/validator.hpp"
#include "ditrail/version.hpp"

using nlohmann::json;
using namespace ditrail;

namespace {

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DITRAIL_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("DITRAIL_BUDGET is not a number");
    }
  }
  return kDefaultBudget;
}

std::vector<VertexId> parse_s_flag(const std::string& text, VertexId n) {
  std::vector<VertexId> s;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    try {
      s.push_back(static_cast<VertexId>(std::stol(token)));
    } catch (const std::exception&) {
      throw InputError("--s: bad vertex '" + token + "'");
    }
  }
  if (s.empty()) throw InputError("--s: empty list");
  for (VertexId v : s) {
    if (v < 0 || v >= n) throw InputError("--s: vertex " + std::to_string(v) + " out of range");
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Inline --s wins over the file's "S:" line; default is all vertices.
std::vector<VertexId> resolve_s(const Instance& instance, const std::string& s_flag) {
  if (!s_flag.empty()) {
    std::vector<VertexId> s = parse_s_flag(s_flag, instance.digraph.order());
    if (instance.s && *instance.s != s) {
      std::cerr << "warning: --s overrides the S: line of the instance file\n";
    }
    return s;
  }
  if (instance.s) {
    std::vector<VertexId> s = *instance.s;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InputError("instance S: line is empty");
    return s;
  }
  std::vector<VertexId> all(static_cast<std::size_t>(instance.digraph.order()));
  for (VertexId v = 0; v < instance.digraph.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return all;
}

json diagnostics_json(const Diagnostics& d) {
  json j = json::object();
  if (d.s_strong) j["s_strong"] = *d.s_strong;
  if (d.semicomplete_pairs) j["semicomplete_pairs"] = *d.semicomplete_pairs;
  if (d.worst_pair) j["worst_pair"] = {d.worst_pair->first, d.worst_pair->second};
  if (d.worst_degree_sum) j["worst_degree_sum"] = *d.worst_degree_sum;
  if (d.threshold) j["threshold"] = *d.threshold;
  if (d.min_semi_degree) j["min_semi_degree"] = *d.min_semi_degree;
  if (d.matching_number) j["matching_number"] = *d.matching_number;
  if (d.lambda) j["lambda"] = *d.lambda;
  if (d.split_case) j["split_case"] = *d.split_case;
  if (d.s_strictly_strong) j["s_strictly_strong"] = *d.s_strictly_strong;
  if (d.strict_strong_inconclusive) j["strict_strong_inconclusive"] = true;
  if (d.strict_witness_pair) {
    j["strict_witness_pair"] = {d.strict_witness_pair->first, d.strict_witness_pair->second};
  }
  if (!d.notes.empty()) j["notes"] = d.notes;
  return j;
}

json certificate_json(const Certificate& c) {
  json j;
  j["theorem"] = std::string(to_string(c.theorem));
  j["digraph_sha256"] = c.digraph_sha256;
  j["s"] = c.s;
  j["vertices"] = c.witness.vertex_sequence();
  j["arc_count"] = c.witness.length();
  return j;
}

json trail_certificate_json(const Digraph& d, std::span<const VertexId> s, const Ditrail& t) {
  json j;
  j["digraph_sha256"] = digraph_sha256(d);
  j["s"] = std::vector<VertexId>(s.begin(), s.end());
  j["vertices"] = t.vertex_sequence();
  j["arc_count"] = t.length();
  return j;
}

json base_report(const std::string& subcommand, const std::string& input_hash) {
  json j;
  j["version"] = std::string(kVersion);
  j["subcommand"] = subcommand;
  j["input_sha256"] = input_hash;
  return j;
}

void finish_report(json& report, const Clock& clock, bool timings, std::uint64_t expansions,
                   bool exhausted) {
  report["budget"] = {{"expansions", expansions}, {"exhausted", exhausted}};
  if (timings) report["timing_ms"] = clock.elapsed_ms();
  std::cout << report.dump(2) << '\n';
}

std::vector<std::string> s_convention_notes(const Digraph& d, std::span<const VertexId> s) {
  std::vector<std::string> notes;
  if (s.size() == 1) {
    notes.push_back("singleton set: closed-trailable means the vertex lies on a closed ditrail");
  }
  if (!is_s_strong(d, s)) {
    notes.push_back("prescribed set spans multiple strong components");
  }
  return notes;
}

int run_check(const std::string& path, const std::string& s_flag,
              std::vector<std::string> theorem_names, bool verify,
              std::optional<std::uint64_t> budget_flag, bool timings) {
  Clock clock;
  Instance instance = load_instance(path);
  const Digraph& d = instance.digraph;
  std::vector<VertexId> s = resolve_s(instance, s_flag);
  SearchBudget budget{resolve_budget(budget_flag)};

  if (theorem_names.empty()) {
    theorem_names = {"degree-sum",          "cyclability",
                     "supereulerian-degree", "lambda-matching",
                     "semidegree-matching",  "semidegree-matching-refined"};
  }

  json report = base_report("check", digraph_sha256(d));
  report["s"] = s;
  json checks = json::array();
  std::uint64_t expansions = 0;
  bool exhausted = false;
  bool any_violation = false;
  std::optional<json> first_certificate;

  std::optional<SemidegreeVerdicts> semidegree;  // computed once for both ids
  for (const std::string& name : theorem_names) {
    std::optional<TheoremId> id = theorem_from_string(name);
    if (!id) throw InputError("unknown theorem id '" + name + "'");
    json entry;
    entry["id"] = name;
    try {
      HypothesisReport hr;
      switch (*id) {
        case TheoremId::degree_sum:
          hr = check_degree_sum_closed_trailable(d, s);
          break;
        case TheoremId::cyclability:
          hr = check_cyclability(d, s);
          break;
        case TheoremId::supereulerian_degree:
          hr = check_supereulerian_degree(d);
          break;
        case TheoremId::supereulerian_lambda:
          hr = check_supereulerian_lambda(d);
          break;
        case TheoremId::semidegree_matching:
        case TheoremId::semidegree_matching_refined: {
          if (!semidegree) semidegree = check_semidegree_matching(d, s, budget);
          hr = *id == TheoremId::semidegree_matching ? semidegree->baseline
                                                     : semidegree->refined;
          break;
        }
      }
      entry["holds"] = hr.holds;
      entry["diagnostics"] = diagnostics_json(hr.diagnostics);
      if (verify && hr.holds) {
        VerifyOutcome outcome = verify_certificate(d, s, hr, budget);
        expansions += outcome.expansions;
        switch (outcome.status) {
          case VerifyStatus::certified:
            entry["verify"] = "certified";
            if (!first_certificate) first_certificate = certificate_json(*outcome.certificate);
            break;
          case VerifyStatus::theorem_violation:
            entry["verify"] = "theorem-violation";
            any_violation = true;
            break;
          case VerifyStatus::inconclusive:
            entry["verify"] = "inconclusive";
            exhausted = true;
            break;
        }
      }
    } catch (const InputError& e) {
      entry["error"] = e.what();
    } catch (const PreconditionError& e) {
      entry["error"] = e.what();
    }
    checks.push_back(entry);
  }
  report["checks"] = checks;
  if (first_certificate) report["certificate"] = *first_certificate;
  report["status"] = any_violation ? "violation" : "ok";
  finish_report(report, clock, timings, expansions, exhausted);
  return any_violation ? 1 : 0;
}

int run_oracle(const std::string& path, const std::string& s_flag, bool dicycle,
               const std::string& method, std::optional<std::uint64_t> budget_flag,
               bool timings) {
  Clock clock;
  Instance instance = load_instance(path);
  const Digraph& d = instance.digraph;
  std::vector<VertexId> s = resolve_s(instance, s_flag);
  SearchBudget budget{resolve_budget(budget_flag)};

  json report = base_report("oracle", digraph_sha256(d));
  report["s"] = s;
  std::vector<std::string> notes = s_convention_notes(d, s);
  if (!notes.empty()) report["notes"] = notes;

  std::uint64_t expansions = 0;
  if (dicycle) {
    OracleResult r = dicycle_through(d, s, budget);
    expansions = r.expansions;
    report["status"] = r.found() ? "found"
                       : r.status == SearchStatus::none ? "none"
                                                        : "inconclusive";
    if (r.found()) report["certificate"] = trail_certificate_json(d, s, *r.witness);
    finish_report(report, clock, timings, expansions,
                  r.status == SearchStatus::budget_exhausted);
    return 0;
  }

  std::optional<OracleResult> dfs, subset;
  if (method == "dfs" || method == "both") {
    dfs = closed_ditrail_through(d, s, budget);
    expansions += dfs->expansions;
  }
  if (method == "subset" || method == "both") {
    subset = closed_ditrail_through_subsets(d, s, budget);
    expansions += subset->expansions;
  }
  const OracleResult& primary = dfs ? *dfs : *subset;

  if (dfs && subset && dfs->status != SearchStatus::budget_exhausted &&
      subset->status != SearchStatus::budget_exhausted && dfs->status != subset->status) {
    report["status"] = "mismatch";
    report["notes"] = {"oracle disagreement: dfs=" +
                       std::string(dfs->found() ? "found" : "none") +
                       " subset=" + std::string(subset->found() ? "found" : "none")};
    finish_report(report, clock, timings, expansions, false);
    return 1;
  }

  report["status"] = primary.found() ? "found"
                     : primary.status == SearchStatus::none ? "none"
                                                            : "inconclusive";
  if (primary.found()) {
    report["certificate"] = trail_certificate_json(d, s, *primary.witness);
    if (!validate_certificate(d, s, primary.witness->vertex_sequence(),
                              primary.witness->length())) {
      throw ContractViolation("oracle witness failed validation");
    }
  }
  finish_report(report, clock, timings, expansions,
                primary.status == SearchStatus::budget_exhausted);
  return 0;
}

int run_construct(const std::string& path, const std::string& s_flag,
                  std::optional<std::uint64_t> budget_flag, bool timings) {
  Clock clock;
  Instance instance = load_instance(path);
  const Digraph& d = instance.digraph;
  std::vector<VertexId> s = resolve_s(instance, s_flag);
  SearchBudget budget{resolve_budget(budget_flag)};

  ConstructResult result = construct(d, s, budget);
  json report = base_report("construct", digraph_sha256(d));
  report["s"] = s;
  json moves = json::array();
  for (const MoveRecord& m : result.moves) {
    moves.push_back({{"move", m.move}, {"params", m.params}, {"trail_length", m.trail_length}});
  }
  report["moves"] = moves;
  switch (result.status) {
    case ConstructStatus::success:
      report["status"] = "success";
      report["certificate"] = trail_certificate_json(d, s, *result.trail);
      break;
    case ConstructStatus::impossible:
      report["status"] = "impossible";
      break;
    case ConstructStatus::inconclusive:
      report["status"] = "inconclusive";
      break;
  }
  finish_report(report, clock, timings, result.expansions,
                result.status == ConstructStatus::inconclusive);
  return 0;
}

int run_gen(VertexId n, double p, std::uint64_t seed, std::size_t count,
            const std::string& target_name, std::optional<int> split_m,
            std::optional<VertexId> s_size, bool require_nonadjacent, const std::string& out_dir,
            std::optional<std::uint64_t> budget_flag, bool timings) {
  Clock clock;
  SearchBudget budget{resolve_budget(budget_flag)};
  std::filesystem::create_directories(out_dir);

  GenSpec spec;
  spec.n = n;
  spec.arc_probability = p;
  spec.seed = seed;
  spec.s_size = s_size;
  spec.require_nonadjacent_pair = require_nonadjacent;
  if (!target_name.empty()) {
    spec.target = theorem_from_string(target_name);
    if (!spec.target) throw InputError("unknown theorem id '" + target_name + "'");
  }

  std::ostringstream spec_text;
  spec_text << "gen n=" << n << " p=" << p << " seed=" << seed << " count=" << count
            << " target=" << (target_name.empty() ? "-" : target_name)
            << " split=" << (split_m ? std::to_string(*split_m) : "-")
            << " s_size=" << (s_size ? std::to_string(*s_size) : "-")
            << " require_nonadjacent=" << require_nonadjacent;

  std::vector<GeneratedInstance> instances;
  SampleStats stats;
  if (split_m) {
    for (std::size_t i = 0; i < count; ++i) {
      instances.push_back(make_split_instance(*split_m, seed ^ (0x9e3779b97f4a7c15ULL * (i + 1))));
    }
    stats.attempts = stats.emitted = count;
  } else if (spec.target) {
    instances = sample_satisfying(spec, count, &stats, budget);
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      GenSpec one = spec;
      one.seed = seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
      Digraph d = random_digraph(one);
      std::vector<VertexId> all(static_cast<std::size_t>(d.order()));
      for (VertexId v = 0; v < d.order(); ++v) all[static_cast<std::size_t>(v)] = v;
      instances.push_back(GeneratedInstance{std::move(d), std::move(all), one.seed, 0});
    }
    stats.attempts = stats.emitted = count;
  }

  std::vector<std::string> files;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::ostringstream name;
    name << "instance_" << std::setw(4) << std::setfill('0') << i << ".txt";
    std::filesystem::path file = std::filesystem::path(out_dir) / name.str();
    std::ofstream out(file);
    if (!out) throw InputError("cannot write " + file.string());
    out << format_instance(instances[i].digraph, instances[i].s);
    files.push_back(name.str());
  }

  json report = base_report("gen", sha256_hex(spec_text.str()));
  report["files"] = files;
  report["stats"] = {{"attempts", stats.attempts},
                     {"emitted", stats.emitted},
                     {"skipped", stats.skipped}};
  report["status"] = "ok";
  finish_report(report, clock, timings, 0, false);
  return 0;
}

int run_hunt(VertexId n_min, VertexId n_max, std::uint64_t instances, std::uint64_t seed,
             unsigned jobs, std::optional<std::uint64_t> budget_flag, bool timings) {
  Clock clock;
  SearchBudget budget{resolve_budget(budget_flag)};

  std::vector<HuntProbe> probes(instances);
  if (jobs <= 1) {
    for (std::uint64_t i = 0; i < instances; ++i) {
      probes[i] = hunt_tightness_probe(n_min, n_max, seed, i, budget);
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::uint64_t i = next.fetch_add(1);
        if (i >= instances) return;
        probes[i] = hunt_tightness_probe(n_min, n_max, seed, i, budget);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  HuntReport hunt;
  hunt.instances_tried = instances;
  for (auto& probe : probes) {
    hunt.shape_hits += probe.shape_hit ? 1 : 0;
    hunt.oracle_timeouts += probe.oracle_timeout ? 1 : 0;
    if (probe.finding) hunt.findings.push_back(std::move(*probe.finding));
  }

  std::ostringstream spec_text;
  spec_text << "hunt n=" << n_min << ".." << n_max << " instances=" << instances
            << " seed=" << seed;
  json report = base_report("hunt", sha256_hex(spec_text.str()));
  json findings = json::array();
  for (const TightnessFinding& f : hunt.findings) {
    findings.push_back({{"degree_sum", f.degree_sum},
                        {"pair", {f.pair.first, f.pair.second}},
                        {"s", f.s},
                        {"instance", format_instance(f.digraph, f.s)}});
  }
  report["findings"] = findings;
  report["stats"] = {{"instances_tried", hunt.instances_tried},
                     {"shape_hits", hunt.shape_hits},
                     {"oracle_timeouts", hunt.oracle_timeouts}};
  report["status"] = "ok";
  finish_report(report, clock, timings, 0, false);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for closed ditrails through prescribed vertex sets"};
  app.require_subcommand(1);
  bool no_timings = false;
  app.add_flag("--no-timings", no_timings, "omit timing_ms for byte-stable reports");

  std::string file, s_flag;
  std::optional<std::uint64_t> budget_flag;
  std::vector<std::string> theorems;
  bool verify = false;

  auto* check = app.add_subcommand("check", "evaluate sufficient conditions");
  check->add_option("file", file, "instance file")->required();
  check->add_option("--s", s_flag, "prescribed set, e.g. 0,2,5 (default: S: line or all)");
  check->add_option("--theorem", theorems, "condition id (repeatable; default: all)");
  check->add_flag("--verify", verify, "confirm holding conditions with the exact oracle");
  check->add_option("--budget", budget_flag, "search expansion cap");

  bool dicycle = false;
  std::string method = "dfs";
  auto* oracle = app.add_subcommand("oracle", "exact closed-ditrail / dicycle search");
  oracle->add_option("file", file, "instance file")->required();
  oracle->add_option("--s", s_flag, "prescribed set");
  oracle->add_flag("--dicycle", dicycle, "search a simple dicycle instead of a closed ditrail");
  oracle->add_option("--method", method, "dfs | subset | both")
      ->check(CLI::IsMember({"dfs", "subset", "both"}));
  oracle->add_option("--budget", budget_flag, "search expansion cap");

  auto* construct_cmd = app.add_subcommand("construct", "proof-move engine with oracle fallback");
  construct_cmd->add_option("file", file, "instance file")->required();
  construct_cmd->add_option("--s", s_flag, "prescribed set");
  construct_cmd->add_option("--budget", budget_flag, "search expansion cap");

  VertexId gen_n = 6;
  double gen_p = 0.3;
  std::uint64_t gen_seed = 0;
  std::size_t gen_count = 1;
  std::string gen_target, gen_out = ".";
  std::optional<int> gen_split;
  std::optional<VertexId> gen_s_size;
  bool gen_require_nonadjacent = false;
  auto* gen = app.add_subcommand("gen", "seeded instance generation");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--p", gen_p, "arc probability");
  gen->add_option("--seed", gen_seed, "rng seed (default 0, never wall-clock)");
  gen->add_option("--count", gen_count, "instances to emit");
  gen->add_option("--target", gen_target, "emit only instances passing this condition");
  gen->add_option("--split", gen_split, "emit the two-complete-components shape for this m");
  gen->add_option("--s-size", gen_s_size, "|S| (default: drawn per instance)");
  gen->add_flag("--require-nonadjacent", gen_require_nonadjacent,
                "keep a nonadjacent pair inside S");
  gen->add_option("--out", gen_out, "output directory")->required();
  gen->add_option("--budget", budget_flag, "search expansion cap");

  VertexId hunt_min = 4, hunt_max = 6;
  std::uint64_t hunt_instances = 100, hunt_seed = 0;
  unsigned hunt_jobs = 1;
  auto* hunt = app.add_subcommand("hunt", "search the 2n-4 boundary for sharpness witnesses");
  hunt->add_option("--n-min", hunt_min, "smallest order");
  hunt->add_option("--n-max", hunt_max, "largest order");
  hunt->add_option("--instances", hunt_instances, "instances to probe");
  hunt->add_option("--seed", hunt_seed, "rng seed");
  hunt->add_option("--jobs", hunt_jobs, "worker threads over independent instances");
  hunt->add_option("--budget", budget_flag, "oracle expansion cap");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
    bool timings = !no_timings;
    if (check->parsed()) {
      return run_check(file, s_flag, theorems, verify, budget_flag, timings);
    }
    if (oracle->parsed()) {
      return run_oracle(file, s_flag, dicycle, method, budget_flag, timings);
    }
    if (construct_cmd->parsed()) {
      return run_construct(file, s_flag, budget_flag, timings);
    }
    if (gen->parsed()) {
      return run_gen(gen_n, gen_p, gen_seed, gen_count, gen_target, gen_split, gen_s_size,
                     gen_require_nonadjacent, gen_out, budget_flag, timings);
    }
    if (hunt->parsed()) {
      return run_hunt(hunt_min, hunt_max, hunt_instances, hunt_seed, hunt_jobs, budget_flag,
                      timings);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const LemmaViolation& e) {
    std::cerr << "lemma violation: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
