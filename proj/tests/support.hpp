#pragma once

// Test helpers: fixture loading, small brute-force oracles that only use
// the definitions, and seeded random instances.

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bidi/bidi.hpp"

namespace bidi::testing {

inline BidirectedGraph fixture(const std::string& name) {
  std::ifstream in(std::string(BIDI_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

/// Parses a document body (header added).
inline BidirectedGraph doc(const std::string& body) { return parse("bidigraph v1\n" + body); }

inline VertexId id(const BidirectedGraph& g, const std::string& label) {
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (g.label(VertexId{v}) == label) return VertexId{v};
  }
  throw std::runtime_error("no vertex " + label);
}

inline std::vector<std::string> names(const BidirectedGraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

/// Classification computed straight from the definitions: transitive
/// closure of the underlying adjacency, then a scan of arc signs.
struct BruteClassification {
  std::size_t gamma = 0;
  std::set<std::uint32_t> sources, sinks, isolated, pseudo_isolated;
  std::map<std::size_t, std::size_t> k;
};

inline BruteClassification brute_classify(const BidirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> conn(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) conn[v][v] = true;
  for (const Arc& a : g.arcs()) {
    const auto x = a.first().vertex.value;
    const auto y = a.second().vertex.value;
    conn[x][y] = conn[y][x] = true;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (conn[i][m] && conn[m][j]) conn[i][j] = true;

  BruteClassification b;
  for (std::uint32_t v = 0; v < n; ++v) {
    std::size_t size = 0;
    for (std::size_t w = 0; w < n; ++w) size += conn[v][w];
    bool plus = false, minus = false, any = false, loop = false;
    for (const Arc& a : g.arcs()) {
      for (const ArcEnd& e : a.ends()) {
        if (e.vertex.value != v) continue;
        any = true;
        loop = loop || a.is_loop();
        (e.sign == Sign::plus ? plus : minus) = true;
      }
    }
    if (!any) b.isolated.insert(v);
    else if (size == 1 && loop) b.pseudo_isolated.insert(v);
    else if (size > 1 && plus && !minus) b.sources.insert(v);
    else if (size > 1 && minus && !plus) b.sinks.insert(v);
  }
  std::vector<bool> done(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (done[v]) continue;
    ++b.gamma;
    std::size_t specials = 0;
    for (std::uint32_t w = 0; w < n; ++w) {
      if (!conn[v][w]) continue;
      done[w] = true;
      specials += b.sources.count(w) + b.sinks.count(w) + b.isolated.count(w) + b.pseudo_isolated.count(w);
    }
    ++b.k[specials];
  }
  return b;
}

/// Mutual-reachability classes of a skew graph from a full closure matrix.
inline std::vector<int> brute_scc(const SkewGraph& h) {
  const std::size_t n = h.node_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
  for (const auto& [x, y] : h.arcs()) r[x][y] = true;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][m] && r[m][j]) r[i][j] = true;
  std::vector<int> cls(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    for (std::size_t j = i; j < n; ++j) {
      if (r[i][j] && r[j][i]) cls[j] = next;
    }
    ++next;
  }
  return cls;
}

/// Random graph with bounded size, varied density and loop share.
inline BidirectedGraph random_case(std::uint64_t seed, std::size_t max_vertices, std::size_t max_arcs) {
  PortableRandom r(seed * 0x9E3779B97F4A7C15ULL + 17);
  RandomGraphSpec spec;
  spec.vertices = 1 + r.below(max_vertices);
  spec.arcs = r.below(max_arcs + 1);
  spec.seed = seed;
  spec.loop_fraction = 0.3 * r.unit();
  return gen_random(spec);
}

inline std::multiset<std::string> arc_multiset(const BidirectedGraph& g) {
  std::multiset<std::string> out;
  for (const Arc& a : g.arcs()) {
    std::string s = format_arc(g, a);
    if (!a.is_loop()) {
      // Orientation-free key for a link.
      const std::string alt = "link " + g.label(a.second().vertex) + ' ' + sign_char(a.second().sign) + ' ' +
                              g.label(a.first().vertex) + ' ' + sign_char(a.first().sign);
      s = std::min(s, alt);
    }
    out.insert(s);
  }
  return out;
}

inline std::set<std::string> arc_set(const BidirectedGraph& g) {
  const auto m = arc_multiset(g);
  return {m.begin(), m.end()};
}

}  // namespace bidi::testing
