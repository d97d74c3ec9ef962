#pragma once

#include <json.hpp>

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "netrel/errors.hpp"
#include "netrel/mpoly.hpp"

namespace netrel {

/// Element reliability: an exact constant or a polynomial in symbols.
using RelValue = MPoly;

enum class Family { bc, fan };

inline std::string to_string(Family f) { return f == Family::bc ? "bc" : "fan"; }
inline Family parse_family(const std::string& s) {
  if (s == "bc") return Family::bc;
  if (s == "fan") return Family::fan;
  throw InputError("unknown family '" + s + "' (expected bc or fan)");
}

/// Brecht-Colbourn ladder S_0..S_n; a_i joins S_{i-2}-S_i, b_i joins S_{i-1}-S_i.
struct LadderInstance {
  int n = 0;
  std::map<int, RelValue> a;  // 2..n
  std::map<int, RelValue> b;  // 1..n
  std::map<int, RelValue> S;  // 0..n
};

/// Generalized fan: path S_0..S_n (edges a_i = S_{i-1}-S_i) plus hub T (spokes b_i = S_i-T).
struct FanInstance {
  int n = 0;
  std::map<int, RelValue> a;  // 1..n
  std::map<int, RelValue> b;  // 0..n
  std::map<int, RelValue> S;  // 0..n
  RelValue T_rel;
};

struct GraphNode {
  std::string name;
  RelValue rel;
};

struct GraphEdge {
  std::size_t u = 0, v = 0;
  RelValue rel;
  std::string name;
};

/// Undirected graph with node/edge reliabilities and a terminal set.
struct GenericGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<std::size_t> terminals;

  std::size_t add_node(std::string name, RelValue rel) {
    nodes.push_back({std::move(name), std::move(rel)});
    return nodes.size() - 1;
  }
  void add_edge(std::size_t u, std::size_t v, RelValue rel, std::string name = {}) {
    edges.push_back({u, v, std::move(rel), std::move(name)});
  }
  std::size_t node_index(const std::string& name) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].name == name) return i;
    throw InputError("unknown node '" + name + "'");
  }
  /// Checks simplicity, endpoint ranges and a nonempty terminal set.
  void validate() const {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges) {
      if (e.u >= nodes.size() || e.v >= nodes.size()) throw InputError("edge endpoint out of range");
      if (e.u == e.v) throw InputError("self-loop on node " + nodes[e.u].name);
      if (!seen.insert(std::minmax(e.u, e.v)).second)
        throw InputError("parallel edge between " + nodes[e.u].name + " and " + nodes[e.v].name);
    }
    if (terminals.empty()) throw InputError("empty terminal set");
    for (auto t : terminals)
      if (t >= nodes.size()) throw InputError("terminal out of range");
  }
};

/// Per-element specification used by the builders.
struct UniformSpec {
  RelValue p = sym("p");
  RelValue rho = sym("rho");
};
struct DistinctSymbols {};
/// Explicit values keyed "a2", "b1", "S0", "T"; every required key must be present.
struct ExplicitSpec {
  std::map<std::string, RelValue> values;
};
using ElementSpec = std::variant<UniformSpec, DistinctSymbols, ExplicitSpec>;

namespace detail {

inline void check_value(const std::string& key, const RelValue& v) {
  if (v.is_constant()) {
    Rational c = v.constant_value();
    if (c < Rational(0) || c > Rational(1))
      throw InputError("reliability " + key + " = " + c.str() + " outside [0,1]");
  }
}

class ElementFiller {
 public:
  explicit ElementFiller(const ElementSpec& spec) : spec_(spec) {}

  RelValue get(const std::string& key, bool is_node) {
    RelValue v;
    if (const auto* u = std::get_if<UniformSpec>(&spec_)) {
      v = is_node ? u->rho : u->p;
    } else if (std::holds_alternative<DistinctSymbols>(spec_)) {
      v = sym(key);
    } else {
      const auto& m = std::get<ExplicitSpec>(spec_).values;
      auto it = m.find(key);
      if (it == m.end()) {
        missing_.push_back(key);
        return RelValue(0);
      }
      v = it->second;
    }
    check_value(key, v);
    return v;
  }
  void finish() const {
    if (missing_.empty()) return;
    std::string msg = "missing element reliabilities:";
    for (const auto& k : missing_) msg += " " + k;
    throw InputError(msg);
  }

 private:
  const ElementSpec& spec_;
  std::vector<std::string> missing_;
};

}  // namespace detail

inline LadderInstance build_ladder(int n, const ElementSpec& spec) {
  if (n < 0) throw InputError("ladder index n must be >= 0");
  detail::ElementFiller fill(spec);
  LadderInstance inst;
  inst.n = n;
  for (int i = 0; i <= n; ++i) inst.S[i] = fill.get("S" + std::to_string(i), true);
  for (int i = 1; i <= n; ++i) inst.b[i] = fill.get("b" + std::to_string(i), false);
  for (int i = 2; i <= n; ++i) inst.a[i] = fill.get("a" + std::to_string(i), false);
  fill.finish();
  return inst;
}

inline FanInstance build_fan(int n, const ElementSpec& spec) {
  if (n < 0) throw InputError("fan index n must be >= 0");
  detail::ElementFiller fill(spec);
  FanInstance inst;
  inst.n = n;
  for (int i = 0; i <= n; ++i) inst.S[i] = fill.get("S" + std::to_string(i), true);
  for (int i = 0; i <= n; ++i) inst.b[i] = fill.get("b" + std::to_string(i), false);
  for (int i = 1; i <= n; ++i) inst.a[i] = fill.get("a" + std::to_string(i), false);
  inst.T_rel = fill.get("T", true);
  fill.finish();
  return inst;
}

/// Ladder as a generic graph; nodes S_0..S_n in order, terminals {source, target}.
inline GenericGraph to_generic(const LadderInstance& inst, int source = 0, int target = -1) {
  if (target < 0) target = inst.n;
  GenericGraph g;
  for (int i = 0; i <= inst.n; ++i) g.add_node("S" + std::to_string(i), inst.S.at(i));
  for (int i = 1; i <= inst.n; ++i)
    g.add_edge(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i), inst.b.at(i), "b" + std::to_string(i));
  for (int i = 2; i <= inst.n; ++i)
    g.add_edge(static_cast<std::size_t>(i - 2), static_cast<std::size_t>(i), inst.a.at(i), "a" + std::to_string(i));
  if (source < 0 || source > inst.n || target > inst.n) throw InputError("terminal index out of range");
  g.terminals = {static_cast<std::size_t>(source)};
  if (target != source) g.terminals.push_back(static_cast<std::size_t>(target));
  return g;
}

/// Fan as a generic graph; nodes S_0..S_n then the hub T (index n+1).
inline GenericGraph to_generic(const FanInstance& inst, int source = 0, int target = -1) {
  if (target < 0) target = inst.n;
  GenericGraph g;
  for (int i = 0; i <= inst.n; ++i) g.add_node("S" + std::to_string(i), inst.S.at(i));
  const std::size_t hub = g.add_node("T", inst.T_rel);
  for (int i = 1; i <= inst.n; ++i)
    g.add_edge(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i), inst.a.at(i), "a" + std::to_string(i));
  for (int i = 0; i <= inst.n; ++i)
    g.add_edge(static_cast<std::size_t>(i), hub, inst.b.at(i), "b" + std::to_string(i));
  if (source < 0 || source > inst.n || target > inst.n) throw InputError("terminal index out of range");
  g.terminals = {static_cast<std::size_t>(source)};
  if (target != source) g.terminals.push_back(static_cast<std::size_t>(target));
  return g;
}

/// Same graph with every node as a terminal (all-terminal setting).
inline GenericGraph with_all_terminals(GenericGraph g) {
  g.terminals.clear();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) g.terminals.push_back(i);
  return g;
}

/// Replaces every element symbol by its uniform value (a_i, b_i -> p; S_i, T -> rho).
inline RelValue uniformize(const RelValue& v, const RelValue& p = sym("p"), const RelValue& rho = sym("rho")) {
  std::map<std::string, MPoly> bind;
  for (const auto& name : v.variables()) {
    if (name == "p" || name == "rho") continue;
    if (name == "T" || name[0] == 'S') bind[name] = rho;
    else if (name[0] == 'a' || name[0] == 'b') bind[name] = p;
  }
  return v.substitute(bind);
}

/**
 * Reads {"family": "bc"|"fan", "n": int, "elements": {"a2": "p", "S0": "3/10", ...}}.
 * Values are expressions parsed into MPoly.
 */
struct InstanceFile {
  Family family = Family::bc;
  int n = 0;
  ExplicitSpec spec;
};

inline InstanceFile parse_instance_json(const nlohmann::json& j) {
  InstanceFile f;
  try {
    std::string fam = j.at("family").get<std::string>();
    if (fam == "generic") throw InputError("generic instances are read with parse_generic_json");
    f.family = parse_family(fam);
    f.n = j.at("n").get<int>();
    for (const auto& [k, v] : j.at("elements").items()) {
      std::string text = v.is_string() ? v.get<std::string>() : v.dump();
      f.spec.values[k] = MPoly::parse(text);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad instance JSON: ") + e.what());
  }
  return f;
}

/**
 * Generic graphs: {"family": "generic", "nodes": {"u": "1", ...},
 * "edges": [["u", "v", "p"], ...], "terminals": ["u", "v"]}.
 */
inline GenericGraph parse_generic_json(const nlohmann::json& j) {
  GenericGraph g;
  try {
    for (const auto& [name, v] : j.at("nodes").items())
      g.add_node(name, MPoly::parse(v.is_string() ? v.get<std::string>() : v.dump()));
    for (const auto& e : j.at("edges")) {
      auto u = g.node_index(e.at(0).get<std::string>());
      auto v = g.node_index(e.at(1).get<std::string>());
      const auto& r = e.at(2);
      g.add_edge(u, v, MPoly::parse(r.is_string() ? r.get<std::string>() : r.dump()));
    }
    for (const auto& t : j.at("terminals")) g.terminals.push_back(g.node_index(t.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad generic graph JSON: ") + e.what());
  }
  g.validate();
  return g;
}

}  // namespace netrel
