#include "ditrail/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "ditrail/errors.hpp"

namespace ditrail {

namespace {

// Iterative Tarjan; component ids later renumbered by smallest member.
struct TarjanState {
  const Digraph& d;
  std::vector<int> index, lowlink, comp;
  std::vector<char> on_stack;
  std::vector<VertexId> stack;
  int next_index = 0;
  int next_comp = 0;

  explicit TarjanState(const Digraph& dg)
      : d(dg),
        index(static_cast<std::size_t>(dg.order()), -1),
        lowlink(static_cast<std::size_t>(dg.order()), 0),
        comp(static_cast<std::size_t>(dg.order()), -1),
        on_stack(static_cast<std::size_t>(dg.order()), 0) {}

  void run(VertexId root) {
    struct Frame {
      VertexId v;
      std::size_t next_child;
    };
    std::vector<Frame> frames;
    frames.push_back({root, 0});
    index[static_cast<std::size_t>(root)] = lowlink[static_cast<std::size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;

    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& out = d.out_neighbors(f.v);
      if (f.next_child < out.size()) {
        VertexId w = out[f.next_child++];
        if (index[static_cast<std::size_t>(w)] < 0) {
          index[static_cast<std::size_t>(w)] = lowlink[static_cast<std::size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          lowlink[static_cast<std::size_t>(f.v)] =
              std::min(lowlink[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
        }
      } else {
        if (lowlink[static_cast<std::size_t>(f.v)] == index[static_cast<std::size_t>(f.v)]) {
          while (true) {
            VertexId w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = 0;
            comp[static_cast<std::size_t>(w)] = next_comp;
            if (w == f.v) break;
          }
          ++next_comp;
        }
        VertexId child = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          VertexId parent = frames.back().v;
          lowlink[static_cast<std::size_t>(parent)] = std::min(
              lowlink[static_cast<std::size_t>(parent)], lowlink[static_cast<std::size_t>(child)]);
        }
      }
    }
  }
};

// Dinic on unit arc capacities.
struct UnitFlow {
  struct E {
    VertexId to;
    int cap;
    std::size_t rev;
  };
  std::vector<std::vector<E>> g;
  std::vector<int> level;
  std::vector<std::size_t> it;

  explicit UnitFlow(VertexId n) : g(static_cast<std::size_t>(n)) {}

  void add_arc(VertexId u, VertexId v) {
    g[static_cast<std::size_t>(u)].push_back({v, 1, g[static_cast<std::size_t>(v)].size()});
    g[static_cast<std::size_t>(v)].push_back({u, 0, g[static_cast<std::size_t>(u)].size() - 1});
  }

  bool bfs(VertexId s, VertexId t) {
    level.assign(g.size(), -1);
    std::queue<VertexId> q;
    level[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (const E& e : g[static_cast<std::size_t>(v)]) {
        if (e.cap > 0 && level[static_cast<std::size_t>(e.to)] < 0) {
          level[static_cast<std::size_t>(e.to)] = level[static_cast<std::size_t>(v)] + 1;
          q.push(e.to);
        }
      }
    }
    return level[static_cast<std::size_t>(t)] >= 0;
  }

  int dfs(VertexId v, VertexId t, int f) {
    if (v == t) return f;
    for (std::size_t& i = it[static_cast<std::size_t>(v)]; i < g[static_cast<std::size_t>(v)].size(); ++i) {
      E& e = g[static_cast<std::size_t>(v)][i];
      if (e.cap > 0 && level[static_cast<std::size_t>(v)] < level[static_cast<std::size_t>(e.to)]) {
        int d = dfs(e.to, t, std::min(f, e.cap));
        if (d > 0) {
          e.cap -= d;
          g[static_cast<std::size_t>(e.to)][e.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  int max_flow(VertexId s, VertexId t) {
    int flow = 0;
    while (bfs(s, t)) {
      it.assign(g.size(), 0);
      while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
    }
    return flow;
  }
};

}  // namespace

SccDecomposition strong_components(const Digraph& d) {
  TarjanState st(d);
  for (VertexId v = 0; v < d.order(); ++v) {
    if (st.index[static_cast<std::size_t>(v)] < 0) st.run(v);
  }
  // Renumber components by smallest member for stable output.
  std::vector<int> first_vertex(static_cast<std::size_t>(st.next_comp),
                                std::numeric_limits<int>::max());
  for (VertexId v = 0; v < d.order(); ++v) {
    int c = st.comp[static_cast<std::size_t>(v)];
    first_vertex[static_cast<std::size_t>(c)] =
        std::min(first_vertex[static_cast<std::size_t>(c)], static_cast<int>(v));
  }
  std::vector<int> order(static_cast<std::size_t>(st.next_comp));
  for (int i = 0; i < st.next_comp; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return first_vertex[static_cast<std::size_t>(a)] < first_vertex[static_cast<std::size_t>(b)];
  });
  std::vector<int> renumber(static_cast<std::size_t>(st.next_comp));
  for (int i = 0; i < st.next_comp; ++i) renumber[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  SccDecomposition out;
  out.component_count = st.next_comp;
  out.component_of.resize(static_cast<std::size_t>(d.order()));
  for (VertexId v = 0; v < d.order(); ++v) {
    out.component_of[static_cast<std::size_t>(v)] =
        renumber[static_cast<std::size_t>(st.comp[static_cast<std::size_t>(v)])];
  }
  return out;
}

bool is_strong(const Digraph& d) {
  if (d.order() == 0) return false;
  return strong_components(d).component_count == 1;
}

bool is_s_strong(const Digraph& d, std::span<const VertexId> s) {
  if (s.empty()) throw InputError("is_s_strong: empty S");
  for (VertexId v : s) {
    if (v < 0 || v >= d.order()) throw InputError("is_s_strong: S vertex out of range");
  }
  SccDecomposition scc = strong_components(d);
  int c = scc.component_of[static_cast<std::size_t>(s[0])];
  for (VertexId v : s) {
    if (scc.component_of[static_cast<std::size_t>(v)] != c) return false;
  }
  return true;
}

int arc_disjoint_path_count(const Digraph& d, VertexId s, VertexId t) {
  if (s == t) throw InputError("arc_disjoint_path_count: s == t");
  UnitFlow flow(d.order());
  for (const Arc& a : d.arcs()) flow.add_arc(a.tail, a.head);
  return flow.max_flow(s, t);
}

int arc_strong_connectivity(const Digraph& d) {
  if (d.order() < 2) throw InputError("arc_strong_connectivity: need n >= 2");
  // min over all ordered pairs equals min over the pairs {(v0,v), (v,v0)}.
  int best = std::numeric_limits<int>::max();
  for (VertexId v = 1; v < d.order(); ++v) {
    best = std::min(best, arc_disjoint_path_count(d, 0, v));
    if (best == 0) return 0;
    best = std::min(best, arc_disjoint_path_count(d, v, 0));
    if (best == 0) return 0;
  }
  return best;
}

LambdaCut arc_strong_connectivity_with_cut(const Digraph& d) {
  if (d.order() < 2) throw InputError("arc_strong_connectivity_with_cut: need n >= 2");
  LambdaCut cut;
  cut.lambda = std::numeric_limits<int>::max();
  for (VertexId v = 1; v < d.order(); ++v) {
    for (auto [s, t] : {std::pair<VertexId, VertexId>{0, v}, {v, 0}}) {
      int f = arc_disjoint_path_count(d, s, t);
      if (f < cut.lambda) {
        cut.lambda = f;
        cut.s = s;
        cut.t = t;
      }
    }
  }
  // Re-run the binding pair and read off the residual-reachable side.
  UnitFlow flow(d.order());
  for (const Arc& a : d.arcs()) flow.add_arc(a.tail, a.head);
  flow.max_flow(cut.s, cut.t);
  flow.bfs(cut.s, cut.t);
  cut.source_side.assign(static_cast<std::size_t>(d.order()), 0);
  for (VertexId v = 0; v < d.order(); ++v) {
    if (flow.level[static_cast<std::size_t>(v)] >= 0) {
      cut.source_side[static_cast<std::size_t>(v)] = 1;
    }
  }
  return cut;
}

}  // namespace ditrail
