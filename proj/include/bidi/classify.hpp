#pragma once

// Deficiency classification of a bidirected graph: connected components of
// the underlying graph, sources/sinks/isolated/pseudo-isolated vertices, the
// grouping of components by special-vertex count, and the two lower bounds.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "bidi/core.hpp"

namespace bidi {

enum class Role { ordinary, source, sink, isolated, pseudo_isolated };

/// A connected component of the underlying graph together with its special
/// vertices (members of S, T, Q or Q'), both in index order.
struct UnderlyingComponent {
  std::vector<VertexId> vertices;
  std::vector<VertexId> specials;
};

struct Classification {
  std::size_t vertex_count = 0;
  std::size_t gamma = 0;
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  std::vector<VertexId> isolated;
  std::vector<VertexId> pseudo_isolated;
  std::vector<Role> role;

  /// Components ordered by minimum vertex index.
  std::vector<UnderlyingComponent> components;
  /// j -> indices into `components` of the components holding exactly j
  /// special vertices.
  std::map<std::size_t, std::vector<std::size_t>> groups;

  std::size_t l1 = 0;
  std::size_t l2 = 0;

  std::size_t k(std::size_t j) const {
    auto it = groups.find(j);
    return it == groups.end() ? 0 : it->second.size();
  }

  /// Largest special count over all components (K).
  std::size_t max_group() const { return groups.empty() ? 0 : groups.rbegin()->first; }

  std::size_t special_count() const {
    return sources.size() + sinks.size() + isolated.size() + pseudo_isolated.size();
  }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Underlying-graph components, each sorted, ordered by minimum vertex.
inline std::vector<std::vector<VertexId>> underlying_components(const BidirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  detail::DisjointSets sets(n);
  for (const Arc& a : g.arcs()) {
    if (!a.is_loop()) sets.unite(a.first().vertex.value, a.second().vertex.value);
  }
  std::vector<std::size_t> slot(n, n);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(VertexId{static_cast<std::uint32_t>(v)});
  }
  return out;
}

/// Classifies every vertex and groups components by their number of special
/// vertices. Throws ComponentWithoutSpecialVertex for a multi-vertex
/// component with no source or sink, which cannot occur in a condensed graph.
inline Classification classify(const BidirectedGraph& g) {
  require_valid(g);
  Classification c;
  c.vertex_count = g.vertex_count();
  c.role.assign(g.vertex_count(), Role::ordinary);

  for (auto& members : underlying_components(g)) {
    UnderlyingComponent comp;
    comp.vertices = std::move(members);
    if (comp.vertices.size() == 1) {
      const VertexId v = comp.vertices.front();
      if (g.incidence(v).empty()) {
        c.role[v.value] = Role::isolated;
        c.isolated.push_back(v);
      } else {
        c.role[v.value] = Role::pseudo_isolated;
        c.pseudo_isolated.push_back(v);
      }
      comp.specials.push_back(v);
    } else {
      for (VertexId v : comp.vertices) {
        const SignsAt s = signs_at(g, v);
        if (s.has_plus && !s.has_minus) {
          c.role[v.value] = Role::source;
          c.sources.push_back(v);
          comp.specials.push_back(v);
        } else if (s.has_minus && !s.has_plus) {
          c.role[v.value] = Role::sink;
          c.sinks.push_back(v);
          comp.specials.push_back(v);
        }
      }
      if (comp.specials.empty()) {
        throw Error(Errc::component_without_special_vertex,
                    "component containing vertex " + std::to_string(comp.vertices.front().value) +
                        " has no source or sink");
      }
    }
    c.groups[comp.specials.size()].push_back(c.components.size());
    c.components.push_back(std::move(comp));
  }

  c.gamma = c.components.size();
  c.l1 = c.k(1) - c.isolated.size();
  for (const auto& [j, members] : c.groups) {
    if (j >= 3) c.l2 += (j - 2) * members.size();
  }
  return c;
}

/// max{2(γ-1), |S|+|T|+|Q'|+2|Q|}; zero for a single-vertex graph.
inline std::size_t sign_lower_bound(const Classification& c) {
  if (c.vertex_count <= 1) return 0;
  const std::size_t gamma_term = c.gamma == 0 ? 0 : 2 * (c.gamma - 1);
  const std::size_t deficiency = c.sources.size() + c.sinks.size() + c.pseudo_isolated.size() +
                                 2 * c.isolated.size();
  return std::max(gamma_term, deficiency);
}

/// λ = max{γ-1, ⌈(|S|+|T|+|Q'|)/2⌉+|Q|}; zero for a single-vertex graph.
inline std::size_t arc_lower_bound(const Classification& c) {
  if (c.vertex_count <= 1) return 0;
  const std::size_t gamma_term = c.gamma == 0 ? 0 : c.gamma - 1;
  const std::size_t odd = c.sources.size() + c.sinks.size() + c.pseudo_isolated.size();
  return std::max(gamma_term, (odd + 1) / 2 + c.isolated.size());
}

}  // namespace bidi
