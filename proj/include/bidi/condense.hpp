#pragma once

// Condensation: contracts every strongly connected component to one vertex,
// re-orienting signs per component so that the condensed graph is acyclic
// and augmentations of it lift back to the original graph at equal cost.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bidi/core.hpp"
#include "bidi/skew.hpp"

namespace bidi {

struct Condensation {
  BidirectedGraph condensed;
  /// Original vertex -> condensed vertex index.
  std::vector<std::uint32_t> component_of;
  /// Orientation bit σ(v); minus means v's signs flip when mapped.
  std::vector<Sign> orientation;
  /// Per condensed vertex.
  std::vector<bool> inconsistent;
  /// Per condensed vertex: minimum original vertex of the component.
  std::vector<VertexId> representative;
  /// Per condensed vertex: all original vertices, in index order.
  std::vector<std::vector<VertexId>> members;

  /// α(v^s) = ŵ_i^{σ(v)s}.
  ArcEnd alpha(VertexId v, Sign s) const {
    return {VertexId{component_of[v.value]}, orientation[v.value] * s};
  }
};

inline Condensation condense(const BidirectedGraph& g) {
  require_valid(g);
  const SkewGraph h = to_skew(g);
  const Decomposition d = decompose(h);
  const std::size_t n = g.vertex_count();

  Condensation c;
  c.component_of = d.component_of;
  c.orientation.assign(n, Sign::plus);
  c.inconsistent = d.inconsistent;
  c.members = d.components;
  c.representative.reserve(d.size());
  for (const auto& w : d.components) c.representative.push_back(w.front());

  // For a consistent component keep the skew SCC holding rep^+ on the plus
  // side; vertices whose minus copy lies in it are flipped.
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.inconsistent[i]) continue;
    const std::uint32_t chosen =
        d.skew_component_of[skew_index(c.representative[i], Sign::plus)];
    for (VertexId v : d.components[i]) {
      if (d.skew_component_of[skew_index(v, Sign::plus)] != chosen) c.orientation[v.value] = Sign::minus;
    }
  }

  std::vector<SkewArc> image;
  image.reserve(h.arcs().size());
  for (const auto& [from, to] : h.arcs()) {
    const SkewNode x = SkewNode::from_index(from);
    const SkewNode y = SkewNode::from_index(to);
    const ArcEnd ax = c.alpha(x.vertex, x.polarity);
    const ArcEnd ay = c.alpha(y.vertex, y.polarity);
    const SkewIndex ix = skew_index(ax.vertex, ax.sign);
    const SkewIndex iy = skew_index(ay.vertex, ay.sign);
    if (ix != iy) image.emplace_back(ix, iy);
  }

  std::vector<std::string> labels;
  labels.reserve(d.size());
  for (VertexId r : c.representative) labels.push_back(g.label(r));
  c.condensed = from_skew(SkewGraph(d.size(), std::move(image)), labels);
  return c;
}

/// Maps arcs on condensed vertices back to the original graph: ŵ_i becomes
/// its representative and each sign is re-oriented by σ(representative).
inline std::vector<Arc> lift(const Condensation& c, std::span<const Arc> added) {
  std::vector<Arc> out;
  out.reserve(added.size());
  auto map_end = [&](const ArcEnd& e) {
    if (e.vertex.value >= c.representative.size()) {
      throw Error(Errc::unknown_condensed_vertex, "condensed vertex " + std::to_string(e.vertex.value));
    }
    const VertexId rep = c.representative[e.vertex.value];
    return ArcEnd{rep, c.orientation[rep.value] * e.sign};
  };
  for (const Arc& a : added) {
    const ArcEnd x = map_end(a.first());
    if (a.is_loop()) {
      out.push_back(Arc::loop(x.vertex, x.sign));
    } else {
      const ArcEnd y = map_end(a.second());
      out.push_back(Arc::link(x.vertex, x.sign, y.vertex, y.sign));
    }
  }
  return out;
}

}  // namespace bidi
