#pragma once

// Brute-force ground truth for small graphs. Nothing here goes through the
// skew graph: signed walks are searched directly over states
// (vertex, sign of the arc end just arrived on), and minimum augmentations
// are found by cost-ordered exhaustive search.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "bidi/augmentation.hpp"
#include "bidi/core.hpp"

namespace bidi::oracle {

enum class Objective { signs, arcs };

struct Options {
  std::size_t max_vertices = 6;
};

/// Every arc that could be added on n vertices: for each vertex a plus- and
/// a minus-loop, then for each pair u < v the four sign combinations.
inline std::vector<Arc> candidate_arcs(std::size_t n) {
  std::vector<Arc> out;
  for (std::uint32_t v = 0; v < n; ++v) {
    out.push_back(Arc::loop(VertexId{v}, Sign::plus));
    out.push_back(Arc::loop(VertexId{v}, Sign::minus));
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      for (Sign su : {Sign::plus, Sign::minus}) {
        for (Sign sv : {Sign::plus, Sign::minus}) out.push_back(Arc::link(VertexId{u}, su, VertexId{v}, sv));
      }
    }
  }
  return out;
}

/// Walk state (v, s): standing at v having arrived on an arc end of sign s.
/// The next arc must have sign -s at v.
class WalkTable {
 public:
  using Mask = std::uint64_t;
  static constexpr std::size_t max_vertices = 32;

  explicit WalkTable(std::size_t n) : n_(n), step_(2 * n, 0) {
    if (n > max_vertices) throw Error(Errc::too_large, "walk table supports at most 32 vertices");
  }

  explicit WalkTable(const BidirectedGraph& g) : WalkTable(g.vertex_count()) {
    for (const Arc& a : g.arcs()) add(a);
  }

  static std::size_t state(VertexId v, Sign arrived) {
    return 2 * v.value + (arrived == Sign::minus ? 1 : 0);
  }

  void add(const Arc& a) {
    const ArcEnd& x = a.first();
    const ArcEnd& y = a.second();
    // Leaving x along a is allowed from a state that arrived at x with -x.sign.
    step_[state(x.vertex, -x.sign)] |= bit(state(y.vertex, y.sign));
    if (!a.is_loop()) step_[state(y.vertex, -y.sign)] |= bit(state(x.vertex, x.sign));
  }

  /// States reachable by walks of 1..cap arcs whose first arc has sign
  /// `first` at u, found layer by layer.
  Mask walks_from(VertexId u, Sign first, std::size_t cap) const {
    Mask frontier = step_[state(u, -first)];
    Mask seen = frontier;
    for (std::size_t len = 1; len < cap && frontier != 0; ++len) {
      Mask next = 0;
      for (std::size_t s = 0; s < 2 * n_; ++s) {
        if (frontier & bit(s)) next |= step_[s];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  /// Full closure: closure()[s] holds the states reachable from s in >= 1 steps.
  std::vector<Mask> closure() const {
    std::vector<Mask> reach = step_;
    for (std::size_t k = 0; k < 2 * n_; ++k) {
      for (std::size_t i = 0; i < 2 * n_; ++i) {
        if (reach[i] & bit(k)) reach[i] |= reach[k];
      }
    }
    return reach;
  }

  std::size_t vertex_count() const { return n_; }

  static constexpr Mask bit(std::size_t s) { return Mask{1} << s; }

 private:
  std::size_t n_;
  std::vector<Mask> step_;
};

namespace detail {

inline void require_small(const BidirectedGraph& g, const Options& opt) {
  if (g.vertex_count() > opt.max_vertices || g.vertex_count() > WalkTable::max_vertices) {
    throw Error(Errc::too_large, std::to_string(g.vertex_count()) + " vertices exceeds oracle limit");
  }
}

inline std::size_t walk_cap(const BidirectedGraph& g) { return 2 * g.arc_count() + 2; }

/// path(u, p, v, q) for all u, p, v, q from a closure table.
inline bool has_path(const std::vector<WalkTable::Mask>& reach, VertexId u, Sign p, VertexId v, Sign q) {
  return reach[WalkTable::state(u, -p)] & WalkTable::bit(WalkTable::state(v, q));
}

inline bool related(const std::vector<WalkTable::Mask>& reach, VertexId u, VertexId v) {
  if (u == v) return true;
  for (Sign p : {Sign::plus, Sign::minus}) {
    for (Sign q : {Sign::plus, Sign::minus}) {
      if (has_path(reach, u, p, v, q) && has_path(reach, u, -p, v, -q)) return true;
    }
  }
  return false;
}

inline bool all_related(const std::vector<WalkTable::Mask>& reach, std::size_t n) {
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (!related(reach, VertexId{u}, VertexId{v})) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Whether a (p, q)-path from u to v exists, by bounded walk search.
inline bool reaches_definitional(const BidirectedGraph& g, VertexId u, Sign p, VertexId v, Sign q,
                                 const Options& opt = {}) {
  detail::require_small(g, opt);
  require_vertex(g, u);
  require_vertex(g, v);
  const WalkTable t(g);
  return t.walks_from(u, p, detail::walk_cap(g)) & WalkTable::bit(WalkTable::state(v, q));
}

/// u ~ v: a (p, q)-path and a (-p, -q)-path from u to v exist.
inline bool strongly_connected_pair(const BidirectedGraph& g, VertexId u, VertexId v,
                                    const Options& opt = {}) {
  detail::require_small(g, opt);
  if (u == v) return true;
  const WalkTable t(g);
  const std::size_t cap = detail::walk_cap(g);
  for (Sign p : {Sign::plus, Sign::minus}) {
    const WalkTable::Mask a = t.walks_from(u, p, cap);
    const WalkTable::Mask b = t.walks_from(u, -p, cap);
    for (Sign q : {Sign::plus, Sign::minus}) {
      if ((a & WalkTable::bit(WalkTable::state(v, q))) && (b & WalkTable::bit(WalkTable::state(v, -q)))) {
        return true;
      }
    }
  }
  return false;
}

inline bool strongly_connected_definitional(const BidirectedGraph& g, const Options& opt = {}) {
  detail::require_small(g, opt);
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (std::uint32_t v = u + 1; v < g.vertex_count(); ++v) {
      if (!strongly_connected_pair(g, VertexId{u}, VertexId{v}, opt)) return false;
    }
  }
  return true;
}

/// Equivalence classes of ~, ordered by minimum vertex.
inline std::vector<std::vector<VertexId>> components_definitional(const BidirectedGraph& g,
                                                                  const Options& opt = {}) {
  detail::require_small(g, opt);
  const std::size_t n = g.vertex_count();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (std::uint32_t u = 0; u < n; ++u) {
    if (cls[u] >= 0) continue;
    cls[u] = static_cast<int>(out.size());
    out.push_back({VertexId{u}});
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (cls[v] < 0 && strongly_connected_pair(g, VertexId{u}, VertexId{v}, opt)) {
        cls[v] = cls[u];
        out.back().push_back(VertexId{v});
      }
    }
  }
  return out;
}

/// Improper cycles of both signs are rooted at v.
inline bool inconsistent_definitional(const BidirectedGraph& g, VertexId v, const Options& opt = {}) {
  return reaches_definitional(g, v, Sign::plus, v, Sign::plus, opt) &&
         reaches_definitional(g, v, Sign::minus, v, Sign::minus, opt);
}

namespace detail {

class Search {
 public:
  Search(const BidirectedGraph& g, std::vector<Arc> candidates)
      : n_(g.vertex_count()), base_(WalkTable(g)), candidates_(std::move(candidates)) {}

  bool connected_with(const std::vector<std::size_t>& chosen) const {
    WalkTable t = base_;
    for (std::size_t i : chosen) t.add(candidates_[i]);
    return all_related(t.closure(), n_);
  }

  /// Extends `chosen` by each k-subset of pool[start..] in lexicographic order
  /// until `visit` returns true, leaving the hit in `chosen`.
  bool combinations(const std::vector<std::size_t>& pool, std::size_t k, std::vector<std::size_t>& chosen,
                    std::size_t start, const std::function<bool()>& visit) const {
    if (k == 0) return visit();
    for (std::size_t i = start; i + k <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (combinations(pool, k - 1, chosen, i + 1, visit)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const std::vector<Arc>& candidates() const { return candidates_; }

 private:
  std::size_t n_;
  WalkTable base_;
  std::vector<Arc> candidates_;
};

}  // namespace detail

/// Exact minimum augmentation by iterative deepening on cost. For the signs
/// objective, witnesses with fewer arcs are tried first at equal cost.
/// Candidates identical to an existing arc are skipped.
inline Augmentation min_augmentation(const BidirectedGraph& g, Objective objective, std::size_t budget,
                                     const Options& opt = {}) {
  require_valid(g);
  detail::require_small(g, opt);
  std::vector<Arc> candidates;
  for (const Arc& c : candidate_arcs(g.vertex_count())) {
    const bool duplicate = std::any_of(g.arcs().begin(), g.arcs().end(),
                                       [&](const Arc& a) { return a.same_boundary(c); });
    if (!duplicate) candidates.push_back(c);
  }
  const detail::Search search(g, candidates);

  std::vector<std::size_t> all_idx;
  std::vector<std::size_t> links;
  std::vector<std::size_t> loops;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    all_idx.push_back(i);
    (candidates[i].is_loop() ? loops : links).push_back(i);
  }

  std::vector<std::size_t> chosen;
  auto found = [&] { return search.connected_with(chosen); };
  auto witness = [&] {
    Augmentation out{{}, Certificate::proven_optimal};
    std::vector<std::size_t> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i : sorted) out.added.push_back(candidates[i]);
    return out;
  };

  for (std::size_t cost = 0; cost <= budget; ++cost) {
    if (objective == Objective::arcs) {
      if (search.combinations(all_idx, cost, chosen, 0, found)) return witness();
      continue;
    }
    for (std::size_t link_count = cost / 2 + 1; link_count-- > 0;) {
      const std::size_t loop_count = cost - 2 * link_count;
      if (link_count > links.size() || loop_count > loops.size()) continue;
      const bool hit = search.combinations(links, link_count, chosen, 0, [&] {
        return search.combinations(loops, loop_count, chosen, 0, found);
      });
      if (hit) return witness();
    }
  }
  throw Error(Errc::infeasible, "no augmentation within budget " + std::to_string(budget));
}

inline std::size_t default_budget(const BidirectedGraph& g) { return 2 * g.vertex_count() + 2; }

/// Calls `visit` on every graph whose arc set is a subset of the candidate
/// universe on n vertices (each candidate up to twice with include_parallel).
inline void enumerate_graphs(std::size_t n, bool include_parallel,
                             const std::function<void(const BidirectedGraph&)>& visit) {
  if (n > 3 || (include_parallel && n > 2)) {
    throw Error(Errc::too_large, "exhaustive enumeration is limited to 3 vertices");
  }
  const std::vector<Arc> cands = candidate_arcs(n);
  const std::size_t base = include_parallel ? 3 : 2;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cands.size(); ++i) total *= base;
  for (std::size_t code = 0; code < total; ++code) {
    BidirectedGraph g(n);
    std::size_t rest = code;
    for (const Arc& a : cands) {
      const std::size_t times = rest % base;
      rest /= base;
      for (std::size_t t = 0; t < times; ++t) g.add_arc(a);
    }
    visit(g);
  }
}

inline std::size_t enumeration_size(std::size_t n, bool include_parallel = false) {
  const std::size_t cands = 2 * n + 2 * n * (n - (n > 0 ? 1 : 0));
  std::size_t total = 1;
  for (std::size_t i = 0; i < cands; ++i) total *= include_parallel ? 3 : 2;
  return total;
}

}  // namespace bidi::oracle
