#pragma once

// Plain-text graph documents, DOT export, and a reproducible random
// generator.
//
// Document grammar (one statement per line, '#' starts a comment):
//
//   bidigraph v1                  required first line
//   vertex <name>                 optional explicit declaration
//   link <u> <+|-> <v> <+|->      link with its sign at u and at v, u != v
//   loop <v> <+|->                self-loop
//
// Vertices are numbered in order of first mention.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bidi/condense.hpp"
#include "bidi/core.hpp"

namespace bidi {

class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline constexpr std::string_view kHeader = "bidigraph v1";

namespace detail {

inline std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  return line;
}

}  // namespace detail

inline BidirectedGraph parse(std::string_view text) {
  BidirectedGraph g;
  std::unordered_map<std::string, VertexId> by_name;
  auto vertex = [&](const std::string& name) {
    auto [it, inserted] = by_name.try_emplace(name, VertexId{});
    if (inserted) it->second = g.add_vertex(name);
    return it->second;
  };

  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (!header_seen) {
      if (detail::strip_comment(raw) != kHeader) {
        throw ParseError(Errc::bad_header, line_no, "expected '" + std::string(kHeader) + "'");
      }
      header_seen = true;
      continue;
    }

    const auto tok = detail::tokens(detail::strip_comment(raw));
    if (tok.empty()) continue;
    auto sign = [&](const std::string& s) {
      if (s == "+") return Sign::plus;
      if (s == "-") return Sign::minus;
      throw ParseError(Errc::bad_sign, line_no, "expected '+' or '-', got '" + s + "'");
    };
    if (tok[0] == "vertex" && tok.size() == 2) {
      vertex(tok[1]);
    } else if (tok[0] == "loop" && tok.size() == 3) {
      const Sign s = sign(tok[2]);
      g.add_loop(vertex(tok[1]), s);
    } else if (tok[0] == "link" && tok.size() == 5) {
      if (tok[1] == tok[3]) {
        throw ParseError(Errc::self_link_via_link_keyword, line_no, "use 'loop' for self-loops");
      }
      const Sign su = sign(tok[2]);
      const Sign sv = sign(tok[4]);
      const VertexId u = vertex(tok[1]);
      g.add_link(u, su, vertex(tok[3]), sv);
    } else {
      throw ParseError(Errc::bad_line, line_no, "unrecognized statement '" + std::string(raw) + "'");
    }
  }
  if (!header_seen) throw ParseError(Errc::bad_header, 1, "empty document");
  return g;
}

inline std::string format_arc(const BidirectedGraph& g, const Arc& a) {
  std::string out;
  if (a.is_loop()) {
    out = "loop " + g.label(a.first().vertex) + ' ' + sign_char(a.first().sign);
  } else {
    out = "link " + g.label(a.first().vertex) + ' ' + sign_char(a.first().sign) + ' ' +
          g.label(a.second().vertex) + ' ' + sign_char(a.second().sign);
  }
  return out;
}

/// Header, every vertex in index order, then arcs in stored order.
inline std::string serialize(const BidirectedGraph& g) {
  std::string out{kHeader};
  out += '\n';
  for (const std::string& name : g.labels()) out += "vertex " + name + '\n';
  for (const Arc& a : g.arcs()) out += format_arc(g, a) + '\n';
  return out;
}

inline std::string export_dot(const BidirectedGraph& g) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + '"';
  };
  std::string out = "graph bidigraph {\n";
  for (const std::string& name : g.labels()) out += "  " + quote(name) + ";\n";
  for (const Arc& a : g.arcs()) {
    const ArcEnd& x = a.first();
    if (a.is_loop()) {
      out += "  " + quote(g.label(x.vertex)) + " -- " + quote(g.label(x.vertex)) + " [label=\"" +
             sign_char(x.sign) + "\"];\n";
    } else {
      const ArcEnd& y = a.second();
      out += "  " + quote(g.label(x.vertex)) + " -- " + quote(g.label(y.vertex)) + " [taillabel=\"" +
             sign_char(x.sign) + "\", headlabel=\"" + sign_char(y.sign) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

struct RandomGraphSpec {
  std::size_t vertices = 1;
  std::size_t arcs = 0;
  std::uint64_t seed = 0;
  double loop_fraction = 0.1;
  bool acyclic_only = false;
};

/// Portable draws from std::mt19937_64, whose output sequence is fixed by
/// the standard. Bounded integers use rejection sampling and the unit
/// interval uses the top 53 bits, so no library distribution is involved.
class PortableRandom {
 public:
  explicit PortableRandom(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  Sign sign() { return below(2) == 0 ? Sign::plus : Sign::minus; }

 private:
  std::mt19937_64 engine_;
};

/// Vertices are labelled v0..v{n-1}. Each arc is a loop with probability
/// loop_fraction (always on one vertex), otherwise a link between two
/// distinct uniform vertices; signs are uniform.
inline BidirectedGraph gen_random(const RandomGraphSpec& spec) {
  BidirectedGraph g;
  for (std::size_t i = 0; i < spec.vertices; ++i) g.add_vertex("v" + std::to_string(i));
  PortableRandom rng(spec.seed);
  const std::uint64_t n = spec.vertices;
  for (std::size_t i = 0; i < spec.arcs && n > 0; ++i) {
    if (n == 1 || rng.unit() < spec.loop_fraction) {
      const VertexId v{static_cast<std::uint32_t>(rng.below(n))};
      g.add_loop(v, rng.sign());
      continue;
    }
    const auto u = static_cast<std::uint32_t>(rng.below(n));
    auto v = static_cast<std::uint32_t>(rng.below(n - 1));
    if (v >= u) ++v;
    const Sign su = rng.sign();
    const Sign sv = rng.sign();
    g.add_link(VertexId{u}, su, VertexId{v}, sv);
  }
  if (spec.acyclic_only) return condense(g).condensed;
  return g;
}

}  // namespace bidi
