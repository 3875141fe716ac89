#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ditrail/digraph.hpp"

namespace ditrail {

/// Directed trail: a nonempty arc sequence with pairwise-distinct arcs,
/// each arc's head equal to the next arc's tail. Closed iff the terminal
/// vertex equals the initial vertex (which forces length >= 2 in a strict
/// digraph). Immutable.
class Ditrail {
 public:
  /// Throws InputError unless the sequence is a valid ditrail.
  explicit Ditrail(std::vector<Arc> arcs);

  /// Builds the trail v0->v1->...->vk. Throws InputError on bad sequences.
  static Ditrail from_vertex_sequence(std::span<const VertexId> seq);

  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t length() const { return arcs_.size(); }
  VertexId initial_vertex() const { return arcs_.front().tail; }
  VertexId terminal_vertex() const { return arcs_.back().head; }
  bool is_closed() const { return initial_vertex() == terminal_vertex(); }

  /// v0 v1 ... vk; for a closed trail the last entry equals the first.
  std::vector<VertexId> vertex_sequence() const;
  /// Sorted, duplicate-free set of visited vertices.
  std::vector<VertexId> vertex_set() const;
  bool visits(VertexId v) const;
  bool uses_arc(const Arc& a) const;

  friend bool operator==(const Ditrail&, const Ditrail&) = default;

 private:
  std::vector<Arc> arcs_;
};

/// Sub-ditrail of a closed trail Q from `from` around to `to`, starting at
/// the first position where `from` occurs as a tail and ending at the first
/// subsequent arrival at `to`. With from == to the full rotation of Q is
/// returned. Throws InputError if either vertex is not on Q.
Ditrail subtrail_of_closed(const Ditrail& q, VertexId from, VertexId to);

/// Composition move: replaces the (x,y)-portion of the closed trail Q with
/// the (x,y)-ditrail T, i.e. returns Q_[y,x] followed by T. With x == y the
/// whole of Q is kept and T is a closed trail attached at x. Throws
/// SpliceError when T shares an arc with Q, InputError when x or y is not
/// on Q or T's endpoints do not match.
Ditrail splice(const Ditrail& q, const Ditrail& t, VertexId x, VertexId y);

/// Arc subset of a digraph with in-degree == out-degree at every vertex.
/// `connected` records whether the underlying graph of the arc-induced
/// subdigraph is connected (isolated vertices do not exist by construction).
struct BalancedSubdigraph {
  std::vector<Arc> arcs;  // sorted, distinct
  bool connected = false;
};

/// Checks the arcs are a duplicate-free subset of D; returns nullopt when
/// the set is not balanced.
std::optional<BalancedSubdigraph> make_balanced_subdigraph(const Digraph& d,
                                                           std::vector<Arc> arcs);

/// Euler circuit of a nonempty, connected, balanced arc set, starting and
/// ending at `start`. Throws ContractViolation when the preconditions fail.
Ditrail hierholzer(const BalancedSubdigraph& b, VertexId start);

}  // namespace ditrail
