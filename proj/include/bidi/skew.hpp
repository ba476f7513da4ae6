#pragma once

// The skew-symmetric directed graph associated with a bidirected graph, and
// everything computed through it: strongly connected components of the
// skew graph, the bidirected decomposition with consistency flags, signed
// reachability, and the strong-connectivity and acyclicity predicates.
//
// Skew node of (v, s) has index 2*v for s = plus and 2*v+1 for s = minus, so
// the mirror of node x is x ^ 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bidi/core.hpp"

namespace bidi {

using SkewIndex = std::uint32_t;

struct SkewNode {
  VertexId vertex;
  Sign polarity;

  SkewIndex index() const { return 2 * vertex.value + (polarity == Sign::minus ? 1 : 0); }

  static SkewNode from_index(SkewIndex i) {
    return {VertexId{i / 2}, (i & 1U) ? Sign::minus : Sign::plus};
  }

  SkewNode mirror() const { return {vertex, -polarity}; }

  friend constexpr bool operator==(const SkewNode&, const SkewNode&) = default;
};

constexpr SkewIndex skew_index(VertexId v, Sign s) {
  return 2 * v.value + (s == Sign::minus ? 1 : 0);
}

constexpr SkewIndex mirror(SkewIndex x) { return x ^ 1U; }

using SkewArc = std::pair<SkewIndex, SkewIndex>;

/// Directed graph on 2|V| nodes stored as an arc list plus a CSR adjacency.
class SkewGraph {
 public:
  SkewGraph() = default;

  SkewGraph(std::size_t vertex_count, std::vector<SkewArc> arcs)
      : node_count_(2 * vertex_count), arcs_(std::move(arcs)) {
    offsets_.assign(node_count_ + 1, 0);
    for (const auto& [from, to] : arcs_) ++offsets_[from + 1];
    for (std::size_t i = 0; i < node_count_; ++i) offsets_[i + 1] += offsets_[i];
    targets_.resize(arcs_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [from, to] : arcs_) targets_[fill[from]++] = to;
  }

  std::size_t node_count() const { return node_count_; }
  std::size_t vertex_count() const { return node_count_ / 2; }
  const std::vector<SkewArc>& arcs() const { return arcs_; }

  std::span<const SkewIndex> successors(SkewIndex x) const {
    return {targets_.data() + offsets_[x], targets_.data() + offsets_[x + 1]};
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<SkewArc> arcs_;
  std::vector<std::size_t> offsets_;
  std::vector<SkewIndex> targets_;
};

/// Each arc with ends (v, p) and (w, q) yields (v^p, w^-q) and its mirror
/// (w^q, v^-p); a loop yields the single self-mirror arc (v^p, v^-p).
inline SkewGraph to_skew(const BidirectedGraph& g) {
  std::vector<SkewArc> arcs;
  arcs.reserve(2 * g.arc_count());
  for (const Arc& a : g.arcs()) {
    const ArcEnd& x = a.first();
    const ArcEnd& y = a.second();
    arcs.emplace_back(skew_index(x.vertex, x.sign), skew_index(y.vertex, -y.sign));
    if (!a.is_loop()) arcs.emplace_back(skew_index(y.vertex, y.sign), skew_index(x.vertex, -x.sign));
  }
  return SkewGraph(g.vertex_count(), std::move(arcs));
}

/// Inverse of to_skew up to duplicate arcs. Mirror pairs are collapsed into
/// one bidirected arc; arcs are emitted in order of their canonical
/// (smaller) skew arc. Node self-arcs (x, x) carry no connectivity and are
/// dropped. `labels` names the vertices when given.
inline BidirectedGraph from_skew(const SkewGraph& h, const std::vector<std::string>& labels = {}) {
  std::vector<SkewArc> arcs = h.arcs();
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  BidirectedGraph g;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    g.add_vertex(v < labels.size() ? labels[v] : std::string{});
  }
  for (const SkewArc& arc : arcs) {
    const SkewArc twin{mirror(arc.second), mirror(arc.first)};
    if (!std::binary_search(arcs.begin(), arcs.end(), twin)) {
      throw Error(Errc::not_skew_symmetric,
                  "arc (" + std::to_string(arc.first) + ", " + std::to_string(arc.second) +
                      ") has no mirror");
    }
    if (arc.first == arc.second || twin < arc) continue;
    const SkewNode x = SkewNode::from_index(arc.first);
    const SkewNode y = SkewNode::from_index(arc.second);
    if (twin == arc) {
      g.add_loop(x.vertex, x.polarity);
    } else {
      g.add_link(x.vertex, x.polarity, y.vertex, -y.polarity);
    }
  }
  return g;
}

/// Skew SCC partition. Component ids are numbered in order of each
/// component's smallest node index.
struct SkewComponents {
  std::vector<std::uint32_t> component_of;
  std::size_t count = 0;
};

/// Iterative Tarjan, linear in nodes plus arcs.
inline SkewComponents scc(const SkewGraph& h) {
  constexpr std::uint32_t unvisited = UINT32_MAX;
  const std::size_t n = h.node_count();
  std::vector<std::uint32_t> index(n, unvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> raw(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<SkewIndex> stack;
  struct Frame {
    SkewIndex node;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::uint32_t counter = 0;
  std::uint32_t raw_count = 0;

  for (SkewIndex root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto succ = h.successors(f.node);
      if (f.next < succ.size()) {
        const SkewIndex w = succ[f.next++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const SkewIndex v = f.node;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
      if (low[v] == index[v]) {
        SkewIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw[w] = raw_count;
        } while (w != v);
        ++raw_count;
      }
    }
  }

  SkewComponents out;
  out.component_of.assign(n, 0);
  std::vector<std::uint32_t> renumber(raw_count, unvisited);
  for (SkewIndex x = 0; x < n; ++x) {
    if (renumber[raw[x]] == unvisited) renumber[raw[x]] = static_cast<std::uint32_t>(out.count++);
    out.component_of[x] = renumber[raw[x]];
  }
  return out;
}

/// Partition of V into strongly connected components W_i, ordered by their
/// minimum vertex, each flagged consistent or inconsistent.
struct Decomposition {
  std::vector<std::vector<VertexId>> components;
  std::vector<bool> inconsistent;
  std::vector<std::uint32_t> skew_component_of;
  std::vector<std::uint32_t> component_of;

  std::size_t size() const { return components.size(); }
};

inline Decomposition decompose(const SkewGraph& h) {
  const SkewComponents sc = scc(h);
  const std::size_t n = h.vertex_count();
  Decomposition d;
  d.skew_component_of = sc.component_of;
  d.component_of.assign(n, 0);
  // A vertex's W_i is keyed by the smaller of its two skew component ids;
  // mirror components share the same vertex set.
  std::vector<std::uint32_t> slot(sc.count, UINT32_MAX);
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t plus = sc.component_of[skew_index(VertexId{v}, Sign::plus)];
    const std::uint32_t minus = sc.component_of[skew_index(VertexId{v}, Sign::minus)];
    const std::uint32_t key = std::min(plus, minus);
    if (slot[key] == UINT32_MAX) {
      slot[key] = static_cast<std::uint32_t>(d.components.size());
      d.components.emplace_back();
      d.inconsistent.push_back(plus == minus);
    }
    d.component_of[v] = slot[key];
    d.components[slot[key]].push_back(VertexId{v});
  }
  return d;
}

inline Decomposition decompose(const BidirectedGraph& g) {
  require_valid(g);
  return decompose(to_skew(g));
}

/// Nodes reachable from `start` by walks of length >= 1.
inline std::vector<bool> reachable_from(const SkewGraph& h, SkewIndex start) {
  std::vector<bool> seen(h.node_count(), false);
  std::vector<SkewIndex> todo;
  for (SkewIndex w : h.successors(start)) {
    if (!seen[w]) {
      seen[w] = true;
      todo.push_back(w);
    }
  }
  while (!todo.empty()) {
    const SkewIndex x = todo.back();
    todo.pop_back();
    for (SkewIndex w : h.successors(x)) {
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

/// True iff a (su, sv)-path from u to v exists, i.e. u^su reaches v^-sv in
/// the skew graph by a nonempty walk.
inline bool reaches(const BidirectedGraph& g, VertexId u, Sign su, VertexId v, Sign sv) {
  require_vertex(g, u);
  require_vertex(g, v);
  return reachable_from(to_skew(g), skew_index(u, su))[skew_index(v, -sv)];
}

inline bool is_strongly_connected(const BidirectedGraph& g) { return decompose(g).size() == 1; }

/// No proper cycle: every strongly connected component is a single vertex.
inline bool is_acyclic(const BidirectedGraph& g) {
  const Decomposition d = decompose(g);
  return d.size() == g.vertex_count();
}

}  // namespace bidi
