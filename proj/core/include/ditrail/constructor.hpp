#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ditrail/digraph.hpp"
#include "ditrail/oracles.hpp"
#include "ditrail/trail.hpp"

namespace ditrail {

/// One accepted or attempted move, for deterministic replay logs.
struct MoveRecord {
  std::string move;
  std::string params;
  std::size_t trail_length = 0;
};

/// Whether a move fired; failure is a value, never an exception.
struct MoveOutcome {
  bool accepted = false;
  std::string reason;
};

/// Mutable search state of a construction run: the current closed trail,
/// the target set, and the move log. The closed-trail invariant and the
/// monotone growth of |V(Q) & S| are enforced on every accepted move.
class AugmentationState {
 public:
  AugmentationState(const Digraph& d, std::vector<VertexId> target, Ditrail trail);

  const Digraph& digraph() const { return *d_; }
  const Ditrail& trail() const { return trail_; }
  const std::vector<VertexId>& target() const { return target_; }
  const std::vector<MoveRecord>& moves() const { return moves_; }

  /// Target vertices not yet on the trail, ascending.
  std::vector<VertexId> pending() const;
  std::size_t covered_count() const;
  bool complete() const { return covered_count() == target_.size(); }

  /// Replaces the trail after checking validity and strict coverage growth;
  /// records the move. Throws ContractViolation on an invalid replacement.
  void accept(Ditrail next, std::string move, std::string params);
  void record(std::string move, std::string params);

 private:
  const Digraph* d_;
  std::vector<VertexId> target_;
  Ditrail trail_;
  std::vector<MoveRecord> moves_;
};

/// Seed trail: the shortest dicycle through a target vertex, preferring
/// seeds that already cover more of the target. nullopt when no target
/// vertex lies on any closed ditrail.
std::optional<Ditrail> initial_trail(const Digraph& d, std::span<const VertexId> s);

/// Detour move: the trail gains the 2-cycle w -> x -> w at a trail vertex
/// w, absorbing the off-trail vertex x. Inapplicable when either arc is
/// missing or already used, or x is already on the trail.
MoveOutcome absorb_two_cycle(AugmentationState& state, VertexId x, VertexId w);

/// Splice move: finds an (x,y)-ditrail through the pending vertex that
/// meets the trail only at its endpoints (built from a jointly shortest
/// entry/exit dipath pair) and splices it in, requiring strict coverage
/// growth.
MoveOutcome augment_via_external_path(AugmentationState& state, VertexId pending);

/// Split-structure move: when the target induces two complete components
/// with no arcs between them and the trail visits both, the in-component
/// detours are replaced by spanning trails of each component, covering the
/// whole target. comp_a/comp_b must each induce a complete digraph.
MoveOutcome bridge_components(AugmentationState& state, std::span<const VertexId> comp_a,
                              std::span<const VertexId> comp_b);

enum class ConstructStatus {
  success,       ///< validated closed trail through all of S
  impossible,    ///< exact oracle proved no closed trail through S exists
  inconclusive,  ///< moves stalled and the fallback budget ran out
};

struct ConstructResult {
  ConstructStatus status = ConstructStatus::inconclusive;
  std::optional<Ditrail> trail;
  std::vector<MoveRecord> moves;
  std::uint64_t expansions = 0;
  bool used_fallback = false;
};

/// Best-effort constructive engine: seeds a trail, then repeats the moves
/// above until S is covered or nothing applies, falling back to the exact
/// oracle on a stall. Correctness rests on the validator and the oracle,
/// not on move completeness; every output is validator-checked.
ConstructResult construct(const Digraph& d, std::span<const VertexId> s,
                          SearchBudget budget = {});

}  // namespace ditrail
