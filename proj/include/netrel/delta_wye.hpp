#pragma once

#include <string>
#include <vector>

#include "netrel/errors.hpp"
#include "netrel/graph_families.hpp"
#include "netrel/oracle.hpp"

namespace netrel {

/// Triangle with node reliabilities A, B, C; edge a is opposite A (B-C), b is A-C, c is A-B.
template <class R>
struct TriangleConfig {
  R A, B, C;
  R a, b, c;
};

/// Connection probabilities of the triangle given that the named nodes are up.
template <class R>
struct TriangleProducts {
  R AC, AB, BC, ABC;
  friend bool operator==(const TriangleProducts&, const TriangleProducts&) = default;
};

template <class R>
TriangleProducts<R> triangle_products(const TriangleConfig<R>& t) {
  const R abc = t.a * t.b * t.c;
  return {t.b + t.a * t.c * t.B - abc * t.B,
          t.c + t.a * t.b * t.C - abc * t.C,
          t.a + t.b * t.c * t.A - abc * t.A,
          t.a * t.b + t.b * t.c + t.a * t.c - R(2) * abc};
}

/// Star replacing the triangle: hub O with edges p_A, p_B, p_C.
struct StarConfig {
  Rational p_A, p_B, p_C, O;
  /// true when some value leaves [0,1] (an algebraic device, not a probability).
  bool formal = false;
};

template <class R>
TriangleProducts<R> star_products(const R& p_A, const R& p_B, const R& p_C, const R& O) {
  return {p_A * O * p_C, p_A * O * p_B, p_B * O * p_C, p_A * O * p_B * p_C};
}

inline TriangleProducts<Rational> star_products(const StarConfig& s) {
  return star_products(s.p_A, s.p_B, s.p_C, s.O);
}

/**
 * Solves p_A O p_C = R_AC, p_A O p_B = R_AB, p_B O p_C = R_BC, p_A O p_B p_C = R_ABC.
 * Dividing the three-terminal relation by each pair relation isolates one edge:
 * p_B = R_ABC / R_AC, p_C = R_ABC / R_AB, p_A = R_ABC / R_BC, and then
 * O = R_AC R_AB R_BC / R_ABC^2. The solution is unique and rational.
 */
inline StarConfig triangle_to_star(const TriangleConfig<Rational>& t) {
  const auto r = triangle_products(t);
  if (r.AC.is_zero() || r.AB.is_zero() || r.BC.is_zero() || r.ABC.is_zero())
    throw InputError("degenerate triangle");
  StarConfig s;
  s.p_A = r.ABC / r.BC;
  s.p_B = r.ABC / r.AC;
  s.p_C = r.ABC / r.AB;
  s.O = r.AC * r.AB * r.BC / (r.ABC * r.ABC);
  for (const auto* v : {&s.p_A, &s.p_B, &s.p_C, &s.O})
    if (*v < Rational(0) || *v > Rational(1)) s.formal = true;
  return s;
}

/// A graph together with the node indices of one of its triangles.
struct TriangleEmbedding {
  GenericGraph graph;
  std::size_t A = 0, B = 1, C = 2;
};

/// The bare triangle with nodes "A", "B", "C".
template <class R>
TriangleEmbedding embed_triangle(const TriangleConfig<R>& t) {
  TriangleEmbedding e;
  e.A = e.graph.add_node("A", RelValue(t.A));
  e.B = e.graph.add_node("B", RelValue(t.B));
  e.C = e.graph.add_node("C", RelValue(t.C));
  e.graph.add_edge(e.B, e.C, RelValue(t.a), "a");
  e.graph.add_edge(e.A, e.C, RelValue(t.b), "b");
  e.graph.add_edge(e.A, e.B, RelValue(t.c), "c");
  e.graph.terminals = {e.A, e.B};
  return e;
}

/// Replaces the triangle's three edges by the star (new node "O" appended).
inline GenericGraph apply_triangle_to_star(const TriangleEmbedding& emb, const StarConfig& s) {
  const auto& g = emb.graph;
  auto is_tri = [&](std::size_t x) { return x == emb.A || x == emb.B || x == emb.C; };
  GenericGraph h;
  h.nodes = g.nodes;
  int removed = 0;
  for (const auto& e : g.edges) {
    if (is_tri(e.u) && is_tri(e.v)) {
      ++removed;
      continue;
    }
    h.edges.push_back(e);
  }
  if (removed != 3) throw InputError("embedding does not contain exactly the three triangle edges");
  for (const auto& n : g.nodes)
    if (n.name == "O") throw InputError("triangle shares a hub with a previous transformation");
  const std::size_t o = h.add_node("O", RelValue(s.O));
  h.add_edge(o, emb.A, RelValue(s.p_A), "pA");
  h.add_edge(o, emb.B, RelValue(s.p_B), "pB");
  h.add_edge(o, emb.C, RelValue(s.p_C), "pC");
  h.terminals = g.terminals;
  return h;
}

struct EquivalenceReport {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> mismatches;
};

/**
 * Compares oracle reliabilities of the original and transformed graphs for
 * every terminal pair among the original nodes and for the triple {A, B, C}.
 */
inline EquivalenceReport verify_equivalence(const TriangleConfig<Rational>& t, const StarConfig& s,
                                            const TriangleEmbedding& emb) {
  const auto& g = emb.graph;
  if (!(g.nodes[emb.A].rel == RelValue(t.A)) || !(g.nodes[emb.B].rel == RelValue(t.B)) ||
      !(g.nodes[emb.C].rel == RelValue(t.C)))
    throw InputError("embedding node reliabilities differ from the triangle configuration");
  const GenericGraph h = apply_triangle_to_star(emb, s);
  EquivalenceReport rep;
  auto check = [&](const std::vector<std::size_t>& K) {
    Rational x = k_terminal_oracle(g, K).numeric();
    Rational y = k_terminal_oracle(h, K).numeric();
    ++rep.checks;
    if (x != y) {
      rep.ok = false;
      std::string names;
      for (auto k : K) names += (names.empty() ? "" : ",") + g.nodes[k].name;
      rep.mismatches.push_back("{" + names + "}: original " + x.str() + " vs star " + y.str());
    }
  };
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j) check({i, j});
  check({emb.A, emb.B, emb.C});
  return rep;
}

}  // namespace netrel
