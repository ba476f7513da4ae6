#pragma once

// Shared pieces of the two augmentation algorithms: the result type, the
// deterministic labeling of deficient vertices, and a working copy of the
// graph that hands out proper signs as arcs are added.

#include <cstddef>
#include <string>
#include <vector>

#include "bidi/classify.hpp"
#include "bidi/core.hpp"

namespace bidi {

enum class Certificate { proven_optimal, within_one, unverified };

inline const char* certificate_name(Certificate c) {
  switch (c) {
    case Certificate::proven_optimal: return "proven-optimal";
    case Certificate::within_one: return "within-one";
    case Certificate::unverified: return "unverified";
  }
  return "unverified";
}

struct Augmentation {
  std::vector<Arc> added;
  Certificate certificate = Certificate::unverified;
  /// Set by the arc algorithm when its final repair loop was needed.
  bool closing_loop = false;

  /// Σ|∂a'|: one per loop, two per link.
  std::size_t sign_cost() const {
    std::size_t total = 0;
    for (const Arc& a : added) total += a.boundary_size();
    return total;
  }

  std::size_t arc_cost() const { return added.size(); }
};

inline BidirectedGraph with_arcs(BidirectedGraph g, const std::vector<Arc>& extra) {
  for (const Arc& a : extra) g.add_arc(a);
  return g;
}

/// Labels for the deficient vertices of an acyclic graph.
///  u: specials (non-isolated) of single-special components, component order;
///  l, r: two smallest specials of each multi-special component, then each
///        isolated vertex as both l and r;
///  w: remaining specials of multi-special components;
///  q: isolated vertices.
struct DeficiencyLabels {
  std::vector<VertexId> u;
  std::vector<VertexId> l;
  std::vector<VertexId> r;
  std::vector<VertexId> w;
  std::vector<VertexId> q;
  std::size_t multi_count = 0;  // |𝒞|
};

inline DeficiencyLabels label_deficiencies(const Classification& c) {
  DeficiencyLabels lab;
  // Components are already in order of their minimum vertex.
  for (const UnderlyingComponent& comp : c.components) {
    if (comp.specials.size() == 1) {
      const VertexId v = comp.specials.front();
      if (c.role[v.value] == Role::isolated) {
        lab.q.push_back(v);
      } else {
        lab.u.push_back(v);
      }
      continue;
    }
    lab.l.push_back(comp.specials[0]);
    lab.r.push_back(comp.specials[1]);
    for (std::size_t i = 2; i < comp.specials.size(); ++i) lab.w.push_back(comp.specials[i]);
  }
  lab.multi_count = lab.l.size();
  for (VertexId q : lab.q) {
    lab.l.push_back(q);
    lab.r.push_back(q);
  }
  return lab;
}

/// The input graph plus the arcs added so far. Proper signs are read from the
/// current state, so the order of additions matters.
class WorkingGraph {
 public:
  explicit WorkingGraph(const BidirectedGraph& g) : graph_(g), has_plus_(g.vertex_count(), false) {
    for (const Arc& a : g.arcs()) note(a);
  }

  VertexId add_vertex(std::string label) {
    has_plus_.push_back(false);
    return graph_.add_vertex(std::move(label));
  }

  Sign proper_sign(VertexId v) const { return has_plus_[v.value] ? Sign::minus : Sign::plus; }

  void add_link(VertexId u, VertexId v) {
    const Sign su = proper_sign(u);
    const Sign sv = proper_sign(v);
    add(Arc::link(u, su, v, sv));
  }

  void add_loop(VertexId v) { add(Arc::loop(v, proper_sign(v))); }

  void add(const Arc& a) {
    graph_.add_arc(a);
    added_.push_back(a);
    note(a);
  }

  const BidirectedGraph& graph() const { return graph_; }
  const std::vector<Arc>& added() const { return added_; }
  std::vector<Arc>& added() { return added_; }

 private:
  void note(const Arc& a) {
    for (const ArcEnd& e : a.ends()) {
      if (e.sign == Sign::plus) has_plus_[e.vertex.value] = true;
    }
  }

  BidirectedGraph graph_;
  std::vector<bool> has_plus_;
  std::vector<Arc> added_;
};

}  // namespace bidi
