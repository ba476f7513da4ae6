#pragma once

// Minimum additional signs. On an acyclic graph the algorithm below adds
// exactly max{2(γ-1), |S|+|T|+|Q'|+2|Q|} signs; general graphs are
// condensed first and the result lifted back.

#include <algorithm>
#include <cstddef>

#include "bidi/augmentation.hpp"
#include "bidi/classify.hpp"
#include "bidi/condense.hpp"
#include "bidi/skew.hpp"

namespace bidi {

namespace detail {

inline void require_acyclic(const BidirectedGraph& g) {
  if (!is_acyclic(g)) throw Error(Errc::not_acyclic, "input graph contains a proper cycle");
}

/// Adds the sign-optimal arcs to `work`, whose underlying graph is acyclic and
/// classified as `c`. Nothing is added for an already strongly connected
/// single vertex.
inline void add_signs_arcs(WorkingGraph& work, const Classification& c) {
  if (c.vertex_count <= 1) return;
  const DeficiencyLabels lab = label_deficiencies(c);
  const auto& u = lab.u;
  const std::size_t l1 = c.l1;
  const std::size_t l2 = c.l2;

  if (l1 == c.gamma) {
    if (c.gamma == 1) {
      work.add_loop(u[0]);
    } else {
      for (std::size_t i = 1; i < l1; ++i) work.add_link(u[0], u[i]);
    }
    return;
  }

  for (std::size_t i = 0; i < std::min(l1, l2); ++i) work.add_link(u[i], lab.w[i]);

  const std::size_t chain = lab.l.size();  // |𝒞| + |Q|
  for (std::size_t i = 0; i + 1 < chain; ++i) work.add_link(lab.r[i], lab.l[i + 1]);

  const VertexId first = lab.l.front();
  const VertexId last = lab.r.back();
  if (l2 + 2 <= l1) {
    work.add_link(u[l2], first);
    for (std::size_t i = l2 + 1; i < l1; ++i) work.add_link(u[i], last);
  } else if (l2 + 1 == l1) {
    work.add_link(u[l1 - 1], first);
    work.add_loop(last);
  } else {
    work.add_loop(first);
    work.add_loop(last);
    for (std::size_t i = l1; i < l2; ++i) work.add_loop(lab.w[i]);
  }
}

}  // namespace detail

/// Sign-optimal augmentation of an acyclic graph. Throws NotAcyclic or
/// ComponentWithoutSpecialVertex.
inline Augmentation additional_signs_acyclic(const BidirectedGraph& g) {
  require_valid(g);
  detail::require_acyclic(g);
  const Classification c = classify(g);
  WorkingGraph work(g);
  detail::add_signs_arcs(work, c);
  return Augmentation{work.added(), Certificate::proven_optimal};
}

/// Sign-optimal augmentation of any graph via condensation.
inline Augmentation augment_signs(const BidirectedGraph& g) {
  require_valid(g);
  if (g.vertex_count() == 0 || is_strongly_connected(g)) return {{}, Certificate::proven_optimal};
  const Condensation cond = condense(g);
  const Augmentation inner = additional_signs_acyclic(cond.condensed);
  return Augmentation{lift(cond, inner.added), Certificate::proven_optimal};
}

}  // namespace bidi
