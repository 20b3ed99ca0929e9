// foldlp/cli.hpp
//
// Command-line front end: one subcommand per pipeline
// (optimize | maxflow | mincut | oddcut | matching), file input in the
// formats of io.hpp, exact-rational text output, optional JSON output and
// decimal approximations.  Exit codes: 0 success, 1 infeasible or marking
// parity, 2 malformed input or usage.

#ifndef FOLDLP_CLI_HPP
#define FOLDLP_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldlp/flow.hpp"
#include "foldlp/graph.hpp"
#include "foldlp/io.hpp"
#include "foldlp/matching.hpp"
#include "foldlp/odd_cut.hpp"
#include "foldlp/opt_star.hpp"
#include "foldlp/polytope.hpp"
#include "foldlp/rational.hpp"

namespace foldlp {
namespace clidetail {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitBadInput = 2;

struct CommonFlags {
  std::string path;
  bool json = false;
  bool approx = false;
  bool trace = false;
  std::string backend = "lp";
};

inline void add_common(CLI::App* cmd, CommonFlags& f, bool with_backend) {
  cmd->add_option("input", f.path, "input file")->required();
  cmd->add_flag("--json", f.json, "emit a single JSON object");
  cmd->add_flag("--approx", f.approx,
                "also print a decimal approximation of the value");
  cmd->add_flag("--trace", f.trace, "report folding iterations");
  if (with_backend)
    cmd->add_option("--backend", f.backend, "max-flow backend")
        ->check(CLI::IsMember({"lp", "aug"}));
}

inline FlowBackend backend_of(const CommonFlags& f) {
  return f.backend == "aug" ? FlowBackend::Aug : FlowBackend::Lp;
}

inline double approx_of(const Rational& q) { return q.to_double(); }

inline std::string approx_text(const Rational& q) {
  std::ostringstream s;
  s << approx_of(q);
  return s.str();
}

// Trace lines share one shape across the folding pipelines.
struct TraceLog {
  bool enabled = false;
  nlohmann::json rows = nlohmann::json::array();
  std::ostream* out = nullptr;
  bool as_json = false;

  template <typename I>
  TraceSink<I> sink() {
    if (!enabled) return {};
    return [this](std::size_t iteration, const IndexMap<I>& sigma,
                  TraceEvent event) {
      const char* name = event == TraceEvent::Abort   ? "abort"
                         : event == TraceEvent::Inside ? "inside"
                                                       : "cut";
      if (as_json) {
        rows.push_back({{"iteration", iteration},
                        {"classes", sigma.class_count()},
                        {"event", name}});
      } else {
        *out << "trace: iteration=" << iteration
             << " classes=" << sigma.class_count() << " event=" << name << "\n";
      }
    };
  }
};

inline nlohmann::json json_names(const std::set<std::string>& side) {
  nlohmann::json arr = nlohmann::json::array();
  for (const std::string& v : side) arr.push_back(v);
  return arr;
}

inline std::string braced(const std::set<std::string>& side) {
  std::string s = "{";
  bool first = true;
  for (const std::string& v : side) {
    if (!first) s += ", ";
    s += v;
    first = false;
  }
  return s + "}";
}

inline void emit_value(std::ostream& out, const CommonFlags& f,
                       nlohmann::json& doc, const std::string& label,
                       const Rational& value) {
  if (f.json) {
    doc["value"] = value.str();
    if (f.approx) doc["value_approx"] = approx_of(value);
  } else {
    out << label << " = " << value.str() << "\n";
    if (f.approx) out << "approx = " << approx_text(value) << "\n";
  }
}

inline int run_optimize(const CommonFlags& f, std::istream& in, std::ostream& out) {
  LpFile lp = parse_lp(in);
  TraceLog log{f.trace, nlohmann::json::array(), &out, f.json};
  OptOutcome<std::string> res =
      opt_star(explicit_oracle(lp.polytope), lp.objective,
               log.sink<std::string>());
  nlohmann::json doc;
  int code = kExitOk;
  if (res.is_optimal()) {
    doc["outcome"] = "optimal";
    emit_value(out, f, doc, "optimal value", *res.value);
    if (f.json) {
      nlohmann::json point;
      for (const auto& [name, q] : *res.point) point[name] = q.str();
      doc["point"] = std::move(point);
    } else {
      out << "point =";
      for (const auto& [name, q] : *res.point)
        out << " " << name << "=" << q.str();
      out << "\n";
    }
  } else if (res.is_unbounded()) {
    doc["outcome"] = "unbounded";
    if (!f.json) out << "outcome = unbounded\n";
  } else {
    doc["outcome"] = "empty";
    if (!f.json) out << "outcome = empty\n";
    code = kExitInfeasible;
  }
  if (f.json) {
    if (f.trace) doc["trace"] = std::move(log.rows);
    out << doc.dump(2) << "\n";
  }
  return code;
}

inline CapacitatedGraph<std::string> loaded_graph(const GraphFile& g) {
  return g.graph;
}

inline void need_endpoint(const CapacitatedGraph<std::string>& g,
                          const std::string& v, const std::string& what) {
  if (!g.has_vertex(v))
    throw ParseError(0, "unknown " + what + " vertex '" + v + "'");
}

inline int run_maxflow(const CommonFlags& f, const std::string& source,
                       const std::string& sink, std::istream& in,
                       std::ostream& out) {
  GraphFile gf = parse_graph(in);
  need_endpoint(gf.graph, source, "source");
  need_endpoint(gf.graph, sink, "sink");
  Flow<std::string> flow = max_flow(gf.graph, source, sink, backend_of(f));
  nlohmann::json doc;
  doc["outcome"] = "optimal";
  emit_value(out, f, doc, "max_flow_value", flow.value());
  if (f.json) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& [e, q] : flow.assignment)
      if (!q.is_zero())
        arcs.push_back(
            {{"from", e.first}, {"to", e.second}, {"value", q.str()}});
    doc["flow"] = std::move(arcs);
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [e, q] : flow.assignment)
      if (!q.is_zero())
        out << "flow " << e.first << " " << e.second << " = " << q.str()
            << "\n";
  }
  return kExitOk;
}

inline int run_mincut(const CommonFlags& f, const std::string& source,
                      const std::string& sink, std::istream& in,
                      std::ostream& out) {
  GraphFile gf = parse_graph(in);
  need_endpoint(gf.graph, source, "source");
  need_endpoint(gf.graph, sink, "sink");
  Cut<std::string> cut = canonical_min_cut(gf.graph, source, sink, backend_of(f));
  Rational value = cut_value(gf.graph, cut);
  nlohmann::json doc;
  doc["outcome"] = "optimal";
  if (!f.json) out << "cut = " << braced(cut.side) << "\n";
  emit_value(out, f, doc, "value", value);
  if (f.json) {
    doc["cut"] = json_names(cut.side);
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

inline int run_oddcut(const CommonFlags& f, std::istream& in, std::ostream& out,
                      std::ostream& err) {
  GraphFile gf = parse_graph(in);
  if (!gf.marked) throw ParseError(0, "odd cut input needs a 'marked' line");
  if (!gf.graph.is_symmetric())
    throw ParseError(0, "odd cut input must be symmetric (use the sym header)");
  MarkedGraph<std::string> g(gf.graph, *gf.marked);
  if (g.marked.empty() || g.marked.size() % 2 != 0) {
    err << "error: marking parity (the marked set must be nonempty and even)\n";
    return kExitInfeasible;
  }
  auto [cut, value] = min_odd_marked_cut(g, backend_of(f));
  nlohmann::json doc;
  doc["outcome"] = "optimal";
  if (!f.json) out << "cut = " << braced(cut.side) << "\n";
  emit_value(out, f, doc, "min_odd_cut_value", value);
  if (f.json) {
    doc["cut"] = json_names(cut.side);
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

inline int run_matching(const CommonFlags& f, std::istream& in,
                        std::ostream& out) {
  MatchingInstance<std::string> inst = parse_match(in);
  TraceLog log{f.trace, nlohmann::json::array(), &out, f.json};
  OptOutcome<std::pair<std::string, std::string>> res =
      opt_star(build_matching_polytope_oracle(inst), inst.objective(),
               log.sink<std::pair<std::string, std::string>>());
  if (!res.is_optimal())
    throw std::logic_error("matching: optimization must end optimal");
  Rational value = *res.value;
  nlohmann::json doc;
  doc["outcome"] = "optimal";
  emit_value(out, f, doc, "max_matching_value", value);
  bool unit = true;
  for (const auto& v : inst.vertices())
    if (inst.bound(v) != Rational(1)) unit = false;
  for (const auto& e : inst.edges())
    if (inst.weight(e) != Rational(1)) unit = false;
  if (unit) {
    bool perfect =
        inst.vertices().size() % 2 == 0 &&
        value == Rational(static_cast<long>(inst.vertices().size()), 2);
    if (f.json)
      doc["perfect"] = perfect;
    else
      out << "perfect = " << (perfect ? "true" : "false") << "\n";
  }
  if (f.json) {
    if (f.trace) doc["trace"] = std::move(log.rows);
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace clidetail

// Runs one invocation; args excludes the program name.  Results go to `out`,
// diagnostics to `err`; the return value is the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  using namespace clidetail;
  CLI::App app{"Exact rational optimization over unordered variable sets"};
  app.require_subcommand(1);

  CommonFlags fopt, fflow, fcut, fodd, fmatch;
  std::string source, sink;

  CLI::App* opt = app.add_subcommand(
      "optimize", "maximize an objective over an explicit polytope");
  add_common(opt, fopt, false);
  CLI::App* flow = app.add_subcommand("maxflow", "maximum flow value and flow");
  add_common(flow, fflow, true);
  flow->add_option("--source", source, "source vertex")->required();
  flow->add_option("--sink", sink, "sink vertex")->required();
  CLI::App* cut = app.add_subcommand("mincut", "canonical minimum cut");
  add_common(cut, fcut, true);
  cut->add_option("--source", source, "source vertex")->required();
  cut->add_option("--sink", sink, "sink vertex")->required();
  CLI::App* odd = app.add_subcommand("oddcut", "minimum odd marked cut");
  add_common(odd, fodd, true);
  fodd.backend = "aug";
  CLI::App* match = app.add_subcommand("matching", "maximum b-matching value");
  add_common(match, fmatch, false);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  const CommonFlags& f = opt->parsed()    ? fopt
                         : flow->parsed() ? fflow
                         : cut->parsed()  ? fcut
                         : odd->parsed()  ? fodd
                                          : fmatch;
  std::ifstream in(f.path);
  if (!in) {
    err << "error: cannot open '" << f.path << "'\n";
    return kExitBadInput;
  }
  try {
    if (opt->parsed()) return run_optimize(f, in, out);
    if (flow->parsed()) return run_maxflow(f, source, sink, in, out);
    if (cut->parsed()) return run_mincut(f, source, sink, in, out);
    if (odd->parsed()) return run_oddcut(f, in, out, err);
    return run_matching(f, in, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const OracleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  }
}

}  // namespace foldlp

#endif  // FOLDLP_CLI_HPP
