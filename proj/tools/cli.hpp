#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it in-process.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bidi/bidi.hpp"

namespace bidi::cli {

using nlohmann::ordered_json;

enum Exit { ok = 0, input_error = 1, internal_error = 2 };

namespace detail {

inline BidirectedGraph load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::bad_line, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

inline void save(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::bad_line, "cannot write '" + path + "'");
  out << text;
}

/// Report fields in a fixed order; printed either as JSON or as
/// "key value" lines (arrays one element per line, indented).
inline void emit(const ordered_json& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : report.items()) {
    if (value.is_array()) {
      out << key << ' ' << value.size() << '\n';
      for (const auto& item : value) {
        out << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
      }
    } else if (value.is_string()) {
      out << key << ' ' << value.get<std::string>() << '\n';
    } else {
      out << key << ' ' << value.dump() << '\n';
    }
  }
}

inline ordered_json arc_lines(const BidirectedGraph& g, const std::vector<Arc>& arcs) {
  ordered_json out = ordered_json::array();
  for (const Arc& a : arcs) out.push_back(format_arc(g, a));
  return out;
}

/// Deficiency summary of the condensed graph.
inline ordered_json check_report(const BidirectedGraph& g) {
  const Condensation cond = condense(g);
  const Classification c = classify(cond.condensed);
  const bool connected = cond.condensed.vertex_count() == 1;
  ordered_json r;
  r["strongly_connected"] = connected;
  r["acyclic"] = cond.condensed.vertex_count() == g.vertex_count();
  r["gamma"] = c.gamma;
  r["s"] = c.sources.size();
  r["t"] = c.sinks.size();
  r["q"] = c.isolated.size();
  r["q_prime"] = c.pseudo_isolated.size();
  r["sign_lower_bound"] = connected ? 0 : sign_lower_bound(c);
  r["lambda"] = connected ? 0 : arc_lower_bound(c);
  return r;
}

inline void add_augmentation(ordered_json& r, const BidirectedGraph& g, const Augmentation& aug) {
  r["added_arcs"] = arc_lines(g, aug.added);
  r["sign_cost"] = aug.sign_cost();
  r["arc_cost"] = aug.arc_cost();
  r["certificate"] = certificate_name(aug.certificate);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong connectivity analysis and augmentation for bidirected graphs", "bidi"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file;
  std::string output;
  std::string objective = "signs";
  std::optional<std::size_t> budget;
  RandomGraphSpec gen_spec;

  auto* check = app.add_subcommand("check", "Connectivity summary and lower bounds");
  auto* decompose_cmd = app.add_subcommand("decompose", "Strongly connected components");
  auto* condense_cmd = app.add_subcommand("condense", "Write the condensed graph");
  auto* augment = app.add_subcommand("augment", "Add arcs to make the graph strongly connected");
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum augmentation by exhaustive search");
  auto* gen = app.add_subcommand("gen", "Generate a seeded random graph");
  auto* dot = app.add_subcommand("export-dot", "Render as Graphviz DOT");

  for (auto* sub : {check, decompose_cmd, condense_cmd, augment, oracle_cmd, dot}) {
    sub->add_option("file", file, "Graph document")->required();
    sub->add_flag("--json", as_json, "Machine-readable output");
  }
  for (auto* sub : {condense_cmd, augment, gen}) sub->add_option("-o,--output", output, "Output file");
  for (auto* sub : {augment, oracle_cmd}) {
    sub->add_option("--objective", objective, "signs or arcs")
        ->check(CLI::IsMember({"signs", "arcs"}))
        ->required();
  }
  oracle_cmd->add_option("--budget", budget, "Maximum cost to search");
  gen->add_option("--vertices", gen_spec.vertices)->required()->check(CLI::PositiveNumber);
  gen->add_option("--arcs", gen_spec.arcs)->required();
  gen->add_option("--seed", gen_spec.seed)->required();
  gen->add_option("--loop-fraction", gen_spec.loop_fraction)->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--acyclic", gen_spec.acyclic_only, "Condense the draw");
  gen->add_flag("--json", as_json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    ordered_json report;
    if (*check) {
      report = detail::check_report(detail::load(file));
    } else if (*decompose_cmd) {
      const BidirectedGraph g = detail::load(file);
      const Decomposition d = decompose(g);
      if (!as_json) {
        for (std::size_t i = 0; i < d.size(); ++i) {
          for (VertexId v : d.components[i]) out << g.label(v) << ' ';
          out << (d.inconsistent[i] ? "inconsistent" : "consistent") << '\n';
        }
        return ok;
      }
      report["components"] = ordered_json::array();
      for (std::size_t i = 0; i < d.size(); ++i) {
        ordered_json comp;
        comp["vertices"] = ordered_json::array();
        for (VertexId v : d.components[i]) comp["vertices"].push_back(g.label(v));
        comp["consistent"] = !d.inconsistent[i];
        report["components"].push_back(comp);
      }
    } else if (*condense_cmd) {
      const Condensation c = condense(detail::load(file));
      const std::string doc = serialize(c.condensed);
      if (!output.empty()) {
        detail::save(output, doc);
        report["output"] = output;
      } else if (!as_json) {
        out << doc;
        return ok;
      } else {
        report["document"] = doc;
      }
    } else if (*augment) {
      const BidirectedGraph g = detail::load(file);
      report = detail::check_report(g);
      const bool arcs = objective == "arcs";
      const Augmentation aug = arcs ? augment_arcs(g) : augment_signs(g);
      const BidirectedGraph result = with_arcs(g, aug.added);
      detail::add_augmentation(report, g, aug);
      report["strongly_connected"] = is_strongly_connected(result);
      if (arcs) {
        const std::size_t lambda = report["lambda"].get<std::size_t>();
        report["window"] = aug.arc_cost() == lambda ? "lambda" : "lambda+1";
      }
      if (!output.empty()) detail::save(output, serialize(result));
    } else if (*oracle_cmd) {
      const BidirectedGraph g = detail::load(file);
      const auto obj = objective == "arcs" ? oracle::Objective::arcs : oracle::Objective::signs;
      const Augmentation aug = oracle::min_augmentation(g, obj, budget.value_or(oracle::default_budget(g)));
      report["minimum"] = obj == oracle::Objective::arcs ? aug.arc_cost() : aug.sign_cost();
      detail::add_augmentation(report, g, aug);
    } else if (*gen) {
      const std::string doc = serialize(gen_random(gen_spec));
      if (!output.empty()) {
        detail::save(output, doc);
        report["output"] = output;
      } else if (!as_json) {
        out << doc;
        return ok;
      } else {
        report["document"] = doc;
      }
    } else if (*dot) {
      const std::string text = export_dot(detail::load(file));
      if (!as_json) {
        out << text;
        return ok;
      }
      report["dot"] = text;
    }
    detail::emit(report, as_json, out);
    return ok;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::internal_assertion ? internal_error : input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return internal_error;
  }
}

}  // namespace bidi::cli
