// foldlp/io.hpp
//
// Text formats for the four input kinds, with line-numbered diagnostics and
// exact round-tripping:
//
//   lp <n> <m>          header; n variable names on the next line; then m
//   x y                 constraint lines "a_1 .. a_n <= b"; finally the
//   1 0 <= 1            objective line "max c_1 .. c_n".
//   max 1 1
//
//   graph <n> [sym]     header; n vertex names; then capacity lines
//   s a t               "u v cap" (one line per directed arc, or one per
//   s a 1               undirected edge under "sym"), plus at most one
//   marked s t          "marked v1 v2 ..." line for marked graphs.
//
//   match <n> <m>       header; n vertex names; m edge lines "u v [weight]"
//   u v w               and optional bound lines "b v k" (defaults: weight 1,
//   u v                 bound 1).  The token "b" is reserved; vertices may
//   b u 2               not use it as a name.
//
// Rational literals are "p", "-p", or "p/q"; no decimals.  Blank lines and
// "#" comments are ignored everywhere.

#ifndef FOLDLP_IO_HPP
#define FOLDLP_IO_HPP

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "foldlp/graph.hpp"
#include "foldlp/matching.hpp"
#include "foldlp/polytope.hpp"
#include "foldlp/rational.hpp"
#include "foldlp/vec.hpp"

namespace foldlp {

// Input diagnostics; line 0 marks problems not tied to a specific line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(
            line == 0 ? message
                      : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace iodetail {

struct TokenLine {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

struct TokenFile {
  std::vector<TokenLine> lines;
  std::size_t end_line = 1;  // line number to report for premature EOF
};

inline TokenFile tokenize(std::istream& in) {
  TokenFile out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    TokenLine line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.lines.push_back(std::move(line));
  }
  out.end_line = number + 1;
  return out;
}

inline std::size_t need_count(const TokenLine& l, std::size_t idx,
                              const std::string& what) {
  const std::string& tok = l.tokens[idx];
  std::optional<Rational> q = parse_rational(tok);
  if (!q || !q->is_integer() || q->sign() < 0)
    throw ParseError(l.number, what + " must be a nonnegative integer, got '" +
                                   tok + "'");
  if (q->num() > 1000000)
    throw ParseError(l.number, what + " is implausibly large");
  return static_cast<std::size_t>(q->num().get_ui());
}

inline Rational need_rational(const TokenLine& l, const std::string& tok,
                              const std::string& what) {
  std::optional<Rational> q = parse_rational(tok);
  if (!q)
    throw ParseError(l.number, "expected rational " + what + ", got '" + tok + "'");
  return *q;
}

inline const TokenLine& need_line(const TokenFile& f, std::size_t idx,
                                  const std::string& what) {
  if (idx >= f.lines.size())
    throw ParseError(f.end_line, "unexpected end of file, expected " + what);
  return f.lines[idx];
}

inline std::vector<std::string> need_names(const TokenLine& l, std::size_t count,
                                           const std::string& what) {
  if (l.tokens.size() != count)
    throw ParseError(l.number, "expected " + std::to_string(count) + " " + what +
                                   ", got " + std::to_string(l.tokens.size()));
  std::set<std::string> seen;
  for (const std::string& name : l.tokens)
    if (!seen.insert(name).second)
      throw ParseError(l.number, "duplicate name '" + name + "'");
  return l.tokens;
}

}  // namespace iodetail

// ----------------------------------------------------------------------------
// Explicit linear programs.
// ----------------------------------------------------------------------------

struct LpFile {
  std::vector<std::string> variables;  // in file order, defining column order
  ExplicitPolytope<std::string> polytope;
  Vec<std::string> objective;
};

inline LpFile parse_lp(std::istream& in) {
  using namespace iodetail;
  TokenFile f = tokenize(in);
  const TokenLine& header = need_line(f, 0, "'lp <vars> <constraints>' header");
  if (header.tokens.size() != 3 || header.tokens[0] != "lp")
    throw ParseError(header.number, "expected header 'lp <vars> <constraints>'");
  std::size_t n = need_count(header, 1, "variable count");
  std::size_t m = need_count(header, 2, "constraint count");

  std::size_t at = 1;
  std::vector<std::string> vars;
  if (n > 0)
    vars = need_names(need_line(f, at++, "variable names"), n, "variable names");

  using Row = ExplicitPolytope<std::string>::Row;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < m; ++i) {
    const TokenLine& l = need_line(f, at++, "a constraint line");
    if (l.tokens.size() != n + 2 || l.tokens[n] != "<=")
      throw ParseError(l.number, "expected 'a_1 .. a_" + std::to_string(n) +
                                     " <= b'");
    Vec<std::string> a = Vec<std::string>::zero(vars);
    for (std::size_t j = 0; j < n; ++j)
      a.set(vars[j], need_rational(l, l.tokens[j], "coefficient"));
    rows.push_back(Row{std::move(a),
                       need_rational(l, l.tokens[n + 1], "right-hand side")});
  }

  const TokenLine& obj = need_line(f, at++, "the objective line");
  if (obj.tokens.size() != n + 1 || obj.tokens[0] != "max")
    throw ParseError(obj.number, "expected 'max c_1 .. c_" + std::to_string(n) +
                                     "'");
  Vec<std::string> c = Vec<std::string>::zero(vars);
  for (std::size_t j = 0; j < n; ++j)
    c.set(vars[j], need_rational(obj, obj.tokens[j + 1], "objective entry"));

  if (at < f.lines.size())
    throw ParseError(f.lines[at].number, "unexpected content after objective");
  ExplicitPolytope<std::string> polytope(vars, std::move(rows));
  return LpFile{std::move(vars), std::move(polytope), std::move(c)};
}

inline std::string print_lp(const LpFile& lp) {
  std::ostringstream out;
  out << "lp " << lp.variables.size() << " " << lp.polytope.rows().size() << "\n";
  if (!lp.variables.empty()) {
    for (std::size_t j = 0; j < lp.variables.size(); ++j)
      out << (j ? " " : "") << lp.variables[j];
    out << "\n";
  }
  for (const auto& row : lp.polytope.rows()) {
    for (const std::string& v : lp.variables) out << row.a[v].str() << " ";
    out << "<= " << row.b.str() << "\n";
  }
  out << "max";
  for (const std::string& v : lp.variables)
    out << " " << lp.objective[v].str();
  out << "\n";
  return out.str();
}

// ----------------------------------------------------------------------------
// Capacitated graphs, optionally marked.
// ----------------------------------------------------------------------------

struct GraphFile {
  CapacitatedGraph<std::string> graph;
  bool symmetric_input = false;  // header carried the "sym" flag
  std::optional<std::set<std::string>> marked;
};

inline GraphFile parse_graph(std::istream& in) {
  using namespace iodetail;
  TokenFile f = tokenize(in);
  const TokenLine& header = need_line(f, 0, "'graph <vertices> [sym]' header");
  bool sym = header.tokens.size() == 3 && header.tokens[2] == "sym";
  if (header.tokens[0] != "graph" || (header.tokens.size() != 2 && !sym))
    throw ParseError(header.number, "expected header 'graph <vertices> [sym]'");
  std::size_t n = need_count(header, 1, "vertex count");

  std::size_t at = 1;
  std::vector<std::string> names;
  if (n > 0)
    names = need_names(need_line(f, at++, "vertex names"), n, "vertex names");
  std::set<std::string> known(names.begin(), names.end());

  std::map<std::pair<std::string, std::string>, Rational> cap;
  std::optional<std::set<std::string>> marked;
  for (; at < f.lines.size(); ++at) {
    const TokenLine& l = f.lines[at];
    if (l.tokens[0] == "marked") {
      if (marked)
        throw ParseError(l.number, "duplicate marked line");
      marked.emplace();
      for (std::size_t j = 1; j < l.tokens.size(); ++j) {
        if (!known.count(l.tokens[j]))
          throw ParseError(l.number, "unknown vertex '" + l.tokens[j] + "'");
        marked->insert(l.tokens[j]);
      }
      continue;
    }
    if (l.tokens.size() != 3)
      throw ParseError(l.number, "expected 'u v capacity'");
    const std::string& u = l.tokens[0];
    const std::string& v = l.tokens[1];
    for (const std::string* name : {&u, &v})
      if (!known.count(*name))
        throw ParseError(l.number, "unknown vertex '" + *name + "'");
    if (u == v) throw ParseError(l.number, "capacity from a vertex to itself");
    Rational q = need_rational(l, l.tokens[2], "capacity");
    if (q.sign() < 0) throw ParseError(l.number, "negative capacity");
    if (cap.count({u, v}) || (sym && cap.count({v, u})))
      throw ParseError(l.number, "duplicate capacity for " + u + " " + v);
    cap[{u, v}] = q;
    if (sym) cap[{v, u}] = std::move(q);
  }
  return GraphFile{CapacitatedGraph<std::string>(names, std::move(cap)), sym,
                   std::move(marked)};
}

inline std::string print_graph(const GraphFile& g) {
  std::ostringstream out;
  const auto& vs = g.graph.vertices();
  out << "graph " << vs.size() << (g.symmetric_input ? " sym" : "") << "\n";
  if (!vs.empty()) {
    for (std::size_t j = 0; j < vs.size(); ++j) out << (j ? " " : "") << vs[j];
    out << "\n";
  }
  for (const auto& [e, q] : g.graph.positive_capacities()) {
    if (g.symmetric_input && e.second < e.first) continue;
    out << e.first << " " << e.second << " " << q.str() << "\n";
  }
  if (g.marked) {
    out << "marked";
    for (const std::string& v : *g.marked) out << " " << v;
    out << "\n";
  }
  return out.str();
}

// ----------------------------------------------------------------------------
// Matching instances.
// ----------------------------------------------------------------------------

inline MatchingInstance<std::string> parse_match(std::istream& in) {
  using namespace iodetail;
  TokenFile f = tokenize(in);
  const TokenLine& header = need_line(f, 0, "'match <vertices> <edges>' header");
  if (header.tokens.size() != 3 || header.tokens[0] != "match")
    throw ParseError(header.number, "expected header 'match <vertices> <edges>'");
  std::size_t n = need_count(header, 1, "vertex count");
  std::size_t m = need_count(header, 2, "edge count");

  std::size_t at = 1;
  std::vector<std::string> names;
  if (n > 0)
    names = need_names(need_line(f, at++, "vertex names"), n, "vertex names");
  std::set<std::string> known(names.begin(), names.end());
  if (known.count("b"))
    throw ParseError(f.lines[at - 1].number,
                     "'b' is reserved for bound lines and cannot name a vertex");

  using EdgeId = std::pair<std::string, std::string>;
  std::vector<EdgeId> edges;
  std::map<EdgeId, Rational> weights;
  std::map<std::string, Rational> bounds;
  std::set<EdgeId> seen_edges;
  for (; at < f.lines.size(); ++at) {
    const TokenLine& l = f.lines[at];
    if (l.tokens[0] == "b") {
      if (l.tokens.size() != 3)
        throw ParseError(l.number, "expected 'b vertex bound'");
      const std::string& v = l.tokens[1];
      if (!known.count(v))
        throw ParseError(l.number, "unknown vertex '" + v + "'");
      if (bounds.count(v))
        throw ParseError(l.number, "duplicate bound for '" + v + "'");
      Rational q = need_rational(l, l.tokens[2], "bound");
      if (!q.is_integer() || q.sign() < 0)
        throw ParseError(l.number, "bound must be a nonnegative integer");
      bounds[v] = std::move(q);
      continue;
    }
    if (l.tokens.size() != 2 && l.tokens.size() != 3)
      throw ParseError(l.number, "expected 'u v [weight]'");
    EdgeId e{l.tokens[0], l.tokens[1]};
    for (const std::string* name : {&e.first, &e.second})
      if (!known.count(*name))
        throw ParseError(l.number, "unknown vertex '" + *name + "'");
    if (e.first == e.second) throw ParseError(l.number, "loop edge");
    if (e.second < e.first) std::swap(e.first, e.second);
    if (!seen_edges.insert(e).second)
      throw ParseError(l.number, "duplicate edge " + e.first + " " + e.second);
    if (l.tokens.size() == 3) {
      Rational q = need_rational(l, l.tokens[2], "weight");
      if (q.sign() < 0) throw ParseError(l.number, "negative weight");
      weights[e] = std::move(q);
    }
    edges.push_back(std::move(e));
  }
  if (edges.size() != m)
    throw ParseError(f.end_line, "header promised " + std::to_string(m) +
                                     " edges, found " +
                                     std::to_string(edges.size()));
  return MatchingInstance<std::string>(names, std::move(edges), std::move(bounds),
                                       std::move(weights));
}

inline std::string print_match(const MatchingInstance<std::string>& inst) {
  std::ostringstream out;
  const auto& vs = inst.vertices();
  out << "match " << vs.size() << " " << inst.edges().size() << "\n";
  if (!vs.empty()) {
    for (std::size_t j = 0; j < vs.size(); ++j) out << (j ? " " : "") << vs[j];
    out << "\n";
  }
  for (const auto& e : inst.edges()) {
    out << e.first << " " << e.second;
    if (inst.weight(e) != Rational(1)) out << " " << inst.weight(e).str();
    out << "\n";
  }
  for (const std::string& v : vs)
    if (inst.bound(v) != Rational(1))
      out << "b " << v << " " << inst.bound(v).str() << "\n";
  return out.str();
}

}  // namespace foldlp

#endif  // FOLDLP_IO_HPP
