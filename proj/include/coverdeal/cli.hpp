#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coverdeal/io.hpp"

namespace coverdeal::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kResource = 2,
  kUnsupported = 3,
  kUsage = 64,
};

/// Enumeration cap, overridable through COVERDEAL_MAX_ANTICHAIN.
inline EnumerationLimits limits_from_env() {
  EnumerationLimits limits;
  if (const char* raw = std::getenv("COVERDEAL_MAX_ANTICHAIN"); raw != nullptr && *raw != '\0') {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(raw, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || raw[used] != '\0' || value == 0)
      throw ValidationError(std::string("COVERDEAL_MAX_ANTICHAIN must be a positive integer, got \"") +
                            raw + "\"");
    limits.max_antichain = static_cast<std::size_t>(value);
  }
  return limits;
}

namespace detail {

inline GraphInput load(const std::string& path) {
  if (path == "-") return read_graph_input(std::cin);
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open input file " + path);
  return read_graph_input(file);
}

inline const HFamilySpec& require_spec(const GraphInput& in, const std::string& what) {
  if (!in.spec)
    throw UnsupportedError(what + " needs family input ({\"n\", \"clique\", \"stars\"})");
  return *in.spec;
}

inline MonomialIdeal cover_ideal_for(const GraphInput& in, const EnumerationLimits& limits) {
  if (in.spec) return closed_form_cover_ideal_h(*in.spec);
  return cover_ideal_from_covers(minimal_covers(in.graph, limits), in.graph.n());
}

inline void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

} // namespace detail

/// Runs one subcommand. Results go to `out`, diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex covers, edge/cover ideals and gateway placement for simple graphs",
               "coverdeal"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input = "-";
  app.add_option("-i,--input", input, "graph JSON file, '-' for stdin")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "check an input graph or family spec");
  auto* covers = app.add_subcommand("covers", "all minimal vertex covers");
  auto* edge = app.add_subcommand("edge-ideal", "edge ideal I(G)");
  auto* cover = app.add_subcommand("cover-ideal", "ideal of vertex covers I_c(G)");
  auto* quotients = app.add_subcommand("quotients", "linear-quotient certificate of I_c(G)");
  auto* resolution = app.add_subcommand("resolution", "Betti numbers and shifts of R/I_c(G)");
  auto* invariants = app.add_subcommand("invariants", "dim, depth, pd, reg, cm of R/I");
  auto* plan = app.add_subcommand("plan", "leader (gateway) placement");
  auto* dot = app.add_subcommand("export-dot", "Graphviz export with leaders highlighted");

  bool text = false;
  for (auto* sub : {edge, cover})
    sub->add_flag("--text", text, "render generators as X1*X2 instead of JSON");

  std::string method = "enum";
  cover->add_option("--method", method, "closed | enum | intersect")
      ->check(CLI::IsMember({"closed", "enum", "intersect"}))
      ->capture_default_str();

  std::string order_mode;
  quotients->add_option("--order", order_mode, "paper | search (default: paper for family input)")
      ->check(CLI::IsMember({"paper", "search"}));

  std::string subject = "edge";
  invariants->add_option("--subject", subject, "edge | cover")
      ->check(CLI::IsMember({"edge", "cover"}))
      ->capture_default_str();

  bool no_leaders = false;
  dot->add_flag("--no-leaders", no_leaders, "plain graph without leader highlighting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  try {
    const EnumerationLimits limits = limits_from_env();
    const GraphInput in = detail::load(input);
    const SimpleGraph& g = in.graph;

    if (validate->parsed()) {
      detail::emit(out, {{"valid", true},
                         {"n", g.n()},
                         {"edges", g.edge_count()},
                         {"in_family", in.spec.has_value()}});
    } else if (covers->parsed()) {
      detail::emit(out, to_json(minimal_covers(g, limits)));
    } else if (edge->parsed()) {
      const auto ideal = edge_ideal(g);
      if (text) out << ideal.to_string() << '\n';
      else detail::emit(out, to_json(ideal));
    } else if (cover->parsed()) {
      MonomialIdeal ideal(g.n(), {});
      if (method == "closed") {
        ideal = closed_form_cover_ideal_h(detail::require_spec(in, "--method closed"));
      } else if (method == "enum") {
        ideal = cover_ideal_from_covers(minimal_covers(g, limits), g.n());
      } else {
        ideal = cover_ideal_by_intersection(g);
        if (ideal.is_unit()) err << "warning: graph has no edges; cover ideal is the unit ideal\n";
      }
      if (text) out << ideal.to_string() << '\n';
      else detail::emit(out, to_json(ideal));
    } else if (quotients->parsed()) {
      if (order_mode.empty()) order_mode = in.spec ? "paper" : "search";
      const MonomialIdeal ideal = detail::cover_ideal_for(in, limits);
      json result;
      if (order_mode == "paper") {
        const auto& spec = detail::require_spec(in, "--order paper");
        const auto check = verify_linear_quotients(ideal, h_family_order(spec, ideal));
        if (const auto* cert = std::get_if<QuotientCertificate>(&check)) result = to_json(*cert);
        else result = to_json(std::get<QuotientFailure>(check));
      } else if (auto cert = search_linear_quotients(ideal)) {
        result = to_json(*cert);
      } else {
        result = {{"linear_quotients", false}, {"exhausted", true}};
      }
      result["gens"] = to_json(ideal)["gens"];
      detail::emit(out, result);
    } else if (resolution->parsed()) {
      const MonomialIdeal ideal = detail::cover_ideal_for(in, limits);
      std::optional<QuotientCertificate> cert;
      if (in.spec) {
        auto check = verify_linear_quotients(ideal, h_family_order(*in.spec, ideal));
        if (auto* c = std::get_if<QuotientCertificate>(&check)) cert = *c;
      } else {
        cert = search_linear_quotients(ideal);
      }
      if (!cert) throw UnsupportedError("cover ideal has no linear-quotient order");
      detail::emit(out, to_json(betti_from_certificate(*cert, generator_degrees(ideal))));
    } else if (invariants->parsed()) {
      if (!in.spec) {
        if (subject == "cover")
          throw UnsupportedError("cover-ideal invariants need family input");
        err << "note: input is not a family spec; Cohen-Macaulayness is not claimed\n";
        detail::emit(out, to_json(graph_report(g, limits)));
      } else {
        detail::emit(out, to_json(subject == "edge" ? edge_ideal_invariants(*in.spec)
                                                    : cover_ideal_invariants(*in.spec)));
      }
    } else if (plan->parsed()) {
      const auto p = plan_placement(g, limits);
      for (const auto& w : p.warnings) err << "warning: " << w << '\n';
      detail::emit(out, to_json(p));
    } else if (dot->parsed()) {
      VertexSet leaders;
      if (!no_leaders) leaders = plan_placement(g, limits).leaders;
      out << to_dot(g, leaders);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  }
  return kOk;
}

} // namespace coverdeal::cli
