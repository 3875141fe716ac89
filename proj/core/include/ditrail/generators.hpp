#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ditrail/digraph.hpp"
#include "ditrail/oracles.hpp"
#include "ditrail/theorems.hpp"

namespace ditrail {

/// Seeded generation request. The seed fully determines the output stream.
struct GenSpec {
  VertexId n = 6;
  double arc_probability = 0.3;
  std::uint64_t seed = 0;
  std::optional<TheoremId> target;
  int repair_budget = 128;
  std::optional<VertexId> s_size;  // drawn in [1, n] per instance when unset
  /// Reject instances whose prescribed set carries no nonadjacent pair;
  /// repairs then refuse to merge the last such pair.
  bool require_nonadjacent_pair = false;
};

/// G(n, p) digraph: each ordered pair becomes an arc with probability p.
Digraph random_digraph(const GenSpec& spec);

struct GeneratedInstance {
  Digraph digraph;
  std::vector<VertexId> s;
  std::uint64_t instance_seed = 0;
  int repairs = 0;
};

struct SampleStats {
  std::uint64_t attempts = 0;
  std::uint64_t emitted = 0;
  std::uint64_t skipped = 0;
};

/// Rejection sampling with arc-addition repair toward the target
/// hypothesis; every emitted instance passes the corresponding checker.
/// Instances that cannot be repaired within the budget are skipped and
/// counted.
std::vector<GeneratedInstance> sample_satisfying(const GenSpec& spec, std::size_t count,
                                                 SampleStats* stats = nullptr,
                                                 SearchBudget budget = {});

/// Two complete components of order m+1 on the prescribed set, no arcs
/// between them, joined through two outside vertices by a 4-cycle; the
/// shape that exercises the split structure of the matching analyzer.
/// Vertex labels are shuffled by the seed. m must be even and positive.
GeneratedInstance make_split_instance(int m, std::uint64_t seed);

struct TightnessFinding {
  Digraph digraph;
  std::vector<VertexId> s;
  std::pair<VertexId, VertexId> pair;
  int degree_sum = 0;
};

struct HuntReport {
  std::vector<TightnessFinding> findings;
  std::uint64_t instances_tried = 0;
  std::uint64_t shape_hits = 0;      // S-strong with min nonadjacent sum exactly 2n-4
  std::uint64_t oracle_timeouts = 0;
};

/// One seeded probe of the hunt; the outcome depends only on (seed, index),
/// so probes parallelize freely.
struct HuntProbe {
  std::optional<TightnessFinding> finding;
  bool shape_hit = false;
  bool oracle_timeout = false;
};

HuntProbe hunt_tightness_probe(VertexId n_min, VertexId n_max, std::uint64_t seed,
                               std::uint64_t index, SearchBudget oracle_budget = {});

/// Searches for S-strong instances whose minimum nonadjacent degree sum over
/// S is exactly 2n-4 and that are nevertheless not closed-trailable. Each
/// finding is independently re-verified before being reported; an empty
/// report asserts nothing.
HuntReport hunt_tightness(VertexId n_min, VertexId n_max, std::uint64_t instance_budget,
                          std::uint64_t seed, SearchBudget oracle_budget = {});

}  // namespace ditrail
