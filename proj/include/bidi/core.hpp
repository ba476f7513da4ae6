#pragma once

// Bidirected graph data model: signs, arcs with a signed boundary, the graph
// container with its incidence lists, and validation.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bidi {

enum class Errc {
  violated_boundary,
  unknown_vertex,
  component_without_special_vertex,
  not_skew_symmetric,
  not_acyclic,
  internal_assertion,
  unknown_condensed_vertex,
  too_large,
  infeasible,
  bad_header,
  bad_sign,
  self_link_via_link_keyword,
  bad_line,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::violated_boundary: return "ViolatedBoundary";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::component_without_special_vertex: return "ComponentWithoutSpecialVertex";
    case Errc::not_skew_symmetric: return "NotSkewSymmetric";
    case Errc::not_acyclic: return "NotAcyclic";
    case Errc::internal_assertion: return "InternalAssertion";
    case Errc::unknown_condensed_vertex: return "UnknownCondensedVertex";
    case Errc::too_large: return "TooLarge";
    case Errc::infeasible: return "Infeasible";
    case Errc::bad_header: return "BadHeader";
    case Errc::bad_sign: return "BadSign";
    case Errc::self_link_via_link_keyword: return "SelfLinkViaLinkKeyword";
    case Errc::bad_line: return "BadLine";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// Product of two signs, used for orientation flips.
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }

constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

struct VertexId {
  std::uint32_t value{};

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

struct ArcEnd {
  VertexId vertex;
  Sign sign;

  friend constexpr bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

/// An arc a with boundary (X_a, Y_a), stored as one or two signed ends.
/// One end is a self-loop; two ends on distinct vertices is a link. Two ends
/// on the same vertex are representable only so that validate() can report
/// them.
class Arc {
 public:
  static Arc loop(VertexId v, Sign s) { return Arc({ArcEnd{v, s}, ArcEnd{v, s}}, 1); }

  static Arc link(VertexId u, Sign su, VertexId v, Sign sv) {
    return Arc({ArcEnd{u, su}, ArcEnd{v, sv}}, 2);
  }

  /// Builds an arc from its positive and negative end sets. Throws
  /// ViolatedBoundary when |X|+|Y| is outside [1, 2]; overlapping sets are
  /// kept and left for validate() to flag.
  static Arc from_boundary(std::span<const VertexId> positive,
                           std::span<const VertexId> negative) {
    const std::size_t size = positive.size() + negative.size();
    if (size < 1 || size > 2) {
      throw Error(Errc::violated_boundary, "boundary size must be 1 or 2");
    }
    std::array<ArcEnd, 2> ends{};
    std::size_t k = 0;
    for (VertexId v : positive) ends[k++] = {v, Sign::plus};
    for (VertexId v : negative) ends[k++] = {v, Sign::minus};
    if (size == 1) ends[1] = ends[0];
    return Arc(ends, static_cast<std::uint8_t>(size));
  }

  bool is_loop() const { return size_ == 1; }
  std::size_t boundary_size() const { return size_; }

  std::span<const ArcEnd> ends() const { return {ends_.data(), size_}; }
  const ArcEnd& first() const { return ends_[0]; }
  /// For loops this is the same end as first().
  const ArcEnd& second() const { return ends_[1]; }

  std::vector<VertexId> positive_end() const { return end_set(Sign::plus); }
  std::vector<VertexId> negative_end() const { return end_set(Sign::minus); }

  /// Sign of this arc at v, or nullopt when v is not an endpoint.
  std::optional<Sign> sign_at(VertexId v) const {
    for (const ArcEnd& e : ends()) {
      if (e.vertex == v) return e.sign;
    }
    return std::nullopt;
  }

  /// Same boundary, ignoring the order of a link's two ends.
  bool same_boundary(const Arc& other) const {
    if (size_ != other.size_) return false;
    if (size_ == 1) return ends_[0] == other.ends_[0];
    return (ends_[0] == other.ends_[0] && ends_[1] == other.ends_[1]) ||
           (ends_[0] == other.ends_[1] && ends_[1] == other.ends_[0]);
  }

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.size_ == b.size_ && a.ends_[0] == b.ends_[0] && a.ends_[1] == b.ends_[1];
  }

 private:
  Arc(std::array<ArcEnd, 2> ends, std::uint8_t size) : ends_(ends), size_(size) {}

  std::vector<VertexId> end_set(Sign s) const {
    std::vector<VertexId> out;
    for (const ArcEnd& e : ends()) {
      if (e.sign == s) out.push_back(e.vertex);
    }
    return out;
  }

  std::array<ArcEnd, 2> ends_;
  std::uint8_t size_;
};

struct Incidence {
  std::size_t arc;
  Sign sign;
};

/// Multigraph of signed arcs over vertices 0..n-1, each with a string label.
class BidirectedGraph {
 public:
  BidirectedGraph() = default;

  explicit BidirectedGraph(std::size_t vertex_count) {
    for (std::size_t i = 0; i < vertex_count; ++i) add_vertex();
  }

  /// Adds a vertex; an empty label defaults to the decimal index.
  VertexId add_vertex(std::string label = {}) {
    const VertexId v{static_cast<std::uint32_t>(labels_.size())};
    labels_.push_back(label.empty() ? std::to_string(v.value) : std::move(label));
    incidence_.emplace_back();
    return v;
  }

  /// Appends an arc. Ends naming unknown vertices are stored but not indexed;
  /// validate() reports them.
  std::size_t add_arc(const Arc& a) {
    const std::size_t index = arcs_.size();
    arcs_.push_back(a);
    for (const ArcEnd& e : a.ends()) {
      if (e.vertex.value < incidence_.size()) incidence_[e.vertex.value].push_back({index, e.sign});
    }
    return index;
  }

  std::size_t add_loop(VertexId v, Sign s) { return add_arc(Arc::loop(v, s)); }
  std::size_t add_link(VertexId u, Sign su, VertexId v, Sign sv) {
    return add_arc(Arc::link(u, su, v, sv));
  }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  bool contains(VertexId v) const { return v.value < labels_.size(); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t i) const { return arcs_[i]; }

  std::span<const Incidence> incidence(VertexId v) const { return incidence_[v.value]; }

  const std::string& label(VertexId v) const { return labels_[v.value]; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const BidirectedGraph& a, const BidirectedGraph& b) {
    return a.labels_ == b.labels_ && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Incidence>> incidence_;
};

struct Violation {
  Errc code;
  std::size_t arc_index;
  std::string message;
};

/// Returns the first arc whose boundary is malformed or names an unknown
/// vertex, or nullopt when the graph is well formed.
inline std::optional<Violation> validate(const BidirectedGraph& g) {
  for (std::size_t i = 0; i < g.arc_count(); ++i) {
    const Arc& a = g.arc(i);
    for (const ArcEnd& e : a.ends()) {
      if (!g.contains(e.vertex)) {
        return Violation{Errc::unknown_vertex, i,
                         "arc " + std::to_string(i) + " references vertex " +
                             std::to_string(e.vertex.value)};
      }
    }
    if (a.boundary_size() == 0 || a.boundary_size() > 2) {
      return Violation{Errc::violated_boundary, i, "arc " + std::to_string(i) + " has bad size"};
    }
    if (!a.is_loop() && a.first().vertex == a.second().vertex) {
      return Violation{Errc::violated_boundary, i,
                       "arc " + std::to_string(i) + " has both ends at vertex " +
                           std::to_string(a.first().vertex.value)};
    }
  }
  return std::nullopt;
}

inline void require_valid(const BidirectedGraph& g) {
  if (auto v = validate(g)) throw Error(v->code, v->message);
}

inline void require_vertex(const BidirectedGraph& g, VertexId v) {
  if (!g.contains(v)) throw Error(Errc::unknown_vertex, "vertex " + std::to_string(v.value));
}

struct SignsAt {
  bool has_plus = false;
  bool has_minus = false;

  friend constexpr bool operator==(const SignsAt&, const SignsAt&) = default;
};

inline SignsAt signs_at(const BidirectedGraph& g, VertexId v) {
  require_vertex(g, v);
  SignsAt out;
  for (const Incidence& inc : g.incidence(v)) {
    (inc.sign == Sign::plus ? out.has_plus : out.has_minus) = true;
  }
  return out;
}

/// Sign a newly added arc end at v receives: plus while v has no positively
/// incident arc, minus afterwards.
inline Sign proper_sign(const BidirectedGraph& g, VertexId v) {
  return signs_at(g, v).has_plus ? Sign::minus : Sign::plus;
}

}  // namespace bidi
