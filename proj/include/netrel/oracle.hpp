#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

#include "netrel/errors.hpp"
#include "netrel/graph_families.hpp"
#include "netrel/mpoly.hpp"
#include "netrel/unipoly.hpp"

namespace netrel {

enum class OracleMode { numeric, symbolic_prho, symbolic_full };

struct OracleResult {
  MPoly value;
  std::uint64_t states_enumerated = 0;
  std::vector<std::size_t> terminals;

  Rational numeric() const { return value.constant_value(); }
};

constexpr std::size_t kOracleMaxElements = 26;
constexpr std::size_t kOracleMaxSymbolicElements = 22;

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { reset(); }
  void reset() { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

/**
 * Indicator of "all terminals up and in one component" over every state.
 * Bit i < |V| is node i, bit |V|+j is edge j. Stored as 64-state words.
 */
inline std::vector<std::uint64_t> connectivity_indicator(const GenericGraph& g,
                                                         const std::vector<std::size_t>& K,
                                                         unsigned threads) {
  const std::size_t V = g.nodes.size(), E = g.edges.size(), k = V + E;
  const std::uint64_t states = std::uint64_t{1} << k;
  const std::uint64_t words = std::max<std::uint64_t>(1, states / 64);
  std::vector<std::uint64_t> ind(words, 0);
  std::uint64_t tmask = 0;
  for (auto t : K) tmask |= std::uint64_t{1} << t;

  auto work = [&](std::uint64_t w0, std::uint64_t w1) {
    UnionFind uf(V);
    for (std::uint64_t w = w0; w < w1; ++w) {
      std::uint64_t bits = 0;
      const std::uint64_t s_end = std::min<std::uint64_t>(64, states);
      for (std::uint64_t s = 0; s < s_end; ++s) {
        const std::uint64_t st = w * 64 + s;
        if ((st & tmask) != tmask) continue;
        uf.reset();
        for (std::size_t e = 0; e < E; ++e) {
          if (!((st >> (V + e)) & 1u)) continue;
          const auto& ed = g.edges[e];
          if (((st >> ed.u) & 1u) && ((st >> ed.v) & 1u)) uf.unite(ed.u, ed.v);
        }
        const std::size_t root = uf.find(K.front());
        bool ok = true;
        for (auto t : K)
          if (uf.find(t) != root) {
            ok = false;
            break;
          }
        if (ok) bits |= std::uint64_t{1} << s;
      }
      ind[w] = bits;
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || words < 64) {
    work(0, words);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (words + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t a = t * chunk, b = std::min(words, a + chunk);
      if (a < b) pool.emplace_back(work, a, b);
    }
    for (auto& th : pool) th.join();
  }
  return ind;
}

// Integer fold of the indicator: sum over states of prod (num_i or den_i - num_i).
class NumericFold {
 public:
  NumericFold(const std::vector<std::uint64_t>& ind, std::vector<mpz_class> num, std::vector<mpz_class> den)
      : ind_(ind), num_(std::move(num)), den_(std::move(den)) {
    full_.resize(num_.size() + 1);
    full_[0] = 1;
    for (std::size_t i = 0; i < num_.size(); ++i) full_[i + 1] = full_[i] * den_[i];
  }
  mpz_class run() const {
    const std::size_t k = num_.size();
    if (k <= 6) return fold_word(ind_[0], k);
    return fold(k, 0);
  }

 private:
  // level = number of low bits handled by this block, offset = first word
  mpz_class fold(std::size_t level, std::uint64_t word) const {
    if (level == 6) return fold_word(ind_[word], 6);
    const std::uint64_t half = std::uint64_t{1} << (level - 7);
    // shortcut for uniform blocks
    bool all0 = true, all1 = true;
    for (std::uint64_t w = word; w < word + 2 * half && (all0 || all1); ++w) {
      if (ind_[w] != 0) all0 = false;
      if (ind_[w] != ~std::uint64_t{0}) all1 = false;
    }
    if (all0) return 0;
    if (all1) return full_[level];
    const std::size_t bit = level - 1;
    mpz_class lo = fold(level - 1, word), hi = fold(level - 1, word + half);
    return lo * (den_[bit] - num_[bit]) + hi * num_[bit];
  }
  mpz_class fold_word(std::uint64_t bits, std::size_t levels) const {
    if (bits == 0) return 0;
    const std::size_t n = std::size_t{1} << levels;
    if (levels == 6 && bits == ~std::uint64_t{0}) return full_[6];
    std::vector<mpz_class> v(n);
    for (std::size_t s = 0; s < n; ++s) v[s] = (bits >> s) & 1u;
    for (std::size_t b = 0; b < levels; ++b) {
      const std::size_t step = std::size_t{1} << b;
      for (std::size_t s = 0; s < n; s += 2 * step)
        v[s] = v[s] * (den_[b] - num_[b]) + v[s + step] * num_[b];
    }
    return v[0];
  }

  const std::vector<std::uint64_t>& ind_;
  std::vector<mpz_class> num_, den_, full_;
};

inline std::vector<const RelValue*> element_values(const GenericGraph& g) {
  std::vector<const RelValue*> xs;
  for (const auto& n : g.nodes) xs.push_back(&n.rel);
  for (const auto& e : g.edges) xs.push_back(&e.rel);
  return xs;
}

}  // namespace detail

/**
 * \brief K-terminal reliability by exhaustive enumeration of node and edge states.
 *
 * A state counts when every terminal is up and all terminals share a component
 * of the subgraph of up nodes and up edges whose endpoints are both up.
 */
inline OracleResult k_terminal_oracle(const GenericGraph& g, std::vector<std::size_t> K,
                                      OracleMode mode = OracleMode::numeric, unsigned threads = 1) {
  const std::size_t V = g.nodes.size(), E = g.edges.size(), k = V + E;
  if (K.empty()) K = g.terminals;
  if (K.empty()) throw InputError("empty terminal set");
  for (auto t : K)
    if (t >= V) throw InputError("terminal out of range");
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  if (k > kOracleMaxElements) throw InputError("instance too large for oracle");
  if (mode == OracleMode::symbolic_full && k > kOracleMaxSymbolicElements)
    throw InputError("instance too large for oracle");

  OracleResult res;
  res.states_enumerated = std::uint64_t{1} << k;
  res.terminals = K;
  const auto ind = detail::connectivity_indicator(g, K, threads);
  const auto xs = detail::element_values(g);
  auto bit = [&](std::uint64_t s) { return (ind[s / 64] >> (s % 64)) & 1u; };

  switch (mode) {
    case OracleMode::numeric: {
      std::vector<mpz_class> num, den;
      for (const auto* x : xs) {
        Rational c = x->constant_value();
        num.push_back(c.num());
        den.push_back(c.den());
      }
      mpz_class total = detail::NumericFold(ind, num, den).run();
      mpz_class d = 1;
      for (const auto& x : den) d *= x;
      res.value = MPoly(Rational(total, d));
      break;
    }
    case OracleMode::symbolic_prho: {
      // all edges share one value P and all nodes one value Q
      for (std::size_t i = 1; i < V; ++i)
        if (!(g.nodes[i].rel == g.nodes[0].rel)) throw InputError("symbolic-prho oracle needs uniform node reliabilities");
      for (std::size_t i = 1; i < E; ++i)
        if (!(g.edges[i].rel == g.edges[0].rel)) throw InputError("symbolic-prho oracle needs uniform edge reliabilities");
      std::vector<std::vector<mpz_class>> count(E + 1, std::vector<mpz_class>(V + 1, 0));
      const std::uint64_t vmask = (std::uint64_t{1} << V) - 1;
      for (std::uint64_t s = 0; s < res.states_enumerated; ++s) {
        if (ind[s / 64] == 0) {
          s |= 63;
          continue;
        }
        if (!bit(s)) continue;
        count[static_cast<std::size_t>(__builtin_popcountll(s >> V))]
             [static_cast<std::size_t>(__builtin_popcountll(s & vmask))] += 1;
      }
      const RelValue P = E ? g.edges[0].rel : RelValue(1);
      const RelValue Q = V ? g.nodes[0].rel : RelValue(1);
      std::vector<MPoly> pp(E + 1, MPoly(1)), qp(E + 1, MPoly(1)), rp(V + 1, MPoly(1)), sp(V + 1, MPoly(1));
      for (std::size_t i = 1; i <= E; ++i) {
        pp[i] = pp[i - 1] * P;
        qp[i] = qp[i - 1] * (MPoly(1) - P);
      }
      for (std::size_t i = 1; i <= V; ++i) {
        rp[i] = rp[i - 1] * Q;
        sp[i] = sp[i - 1] * (MPoly(1) - Q);
      }
      MPoly total;
      for (std::size_t e = 0; e <= E; ++e)
        for (std::size_t v = 0; v <= V; ++v)
          if (count[e][v] != 0)
            total += MPoly(Rational(count[e][v])) * pp[e] * qp[E - e] * rp[v] * sp[V - v];
      res.value = total;
      break;
    }
    case OracleMode::symbolic_full: {
      // Multilinear expansion: coefficient of prod_{i in T} x_i is the signed subset sum.
      std::vector<std::int64_t> c(res.states_enumerated);
      for (std::uint64_t s = 0; s < res.states_enumerated; ++s) c[s] = static_cast<std::int64_t>(bit(s));
      for (std::size_t b = 0; b < k; ++b) {
        const std::uint64_t m = std::uint64_t{1} << b;
        for (std::uint64_t s = 0; s < res.states_enumerated; ++s)
          if (s & m) c[s] -= c[s ^ m];
      }
      // fast path: each element is a distinct bare symbol or a constant
      bool fast = true;
      std::vector<std::string> names;
      std::vector<int> sym_index(k, -1);
      std::vector<Rational> constant(k, Rational(0));
      for (std::size_t i = 0; i < k && fast; ++i) {
        const auto& x = *xs[i];
        if (x.is_constant()) {
          constant[i] = x.constant_value();
        } else if (x.terms().size() == 1 && x.variables().size() == 1 && x.terms()[0].coeff.is_one() &&
                   x.terms()[0].exps[0] == 1 &&
                   std::find(names.begin(), names.end(), x.variables()[0]) == names.end()) {
          sym_index[i] = static_cast<int>(names.size());
          names.push_back(x.variables()[0]);
        } else {
          fast = false;
        }
      }
      if (fast) {
        std::vector<MPoly::Term> terms;
        for (std::uint64_t s = 0; s < res.states_enumerated; ++s) {
          if (c[s] == 0) continue;
          Rational coef(static_cast<long>(c[s]));
          Exponents e(names.size(), 0);
          for (std::size_t i = 0; i < k; ++i) {
            if (!((s >> i) & 1u)) continue;
            if (sym_index[i] >= 0) e[static_cast<std::size_t>(sym_index[i])] = 1;
            else coef *= constant[i];
          }
          if (!coef.is_zero()) terms.push_back({std::move(e), coef});
        }
        res.value = MPoly::from_terms(names, std::move(terms));
      } else {
        MPoly total;
        for (std::uint64_t s = 0; s < res.states_enumerated; ++s) {
          if (c[s] == 0) continue;
          MPoly t(Rational(static_cast<long>(c[s])));
          for (std::size_t i = 0; i < k; ++i)
            if ((s >> i) & 1u) t = t * *xs[i];
          total += t;
        }
        res.value = total;
      }
      break;
    }
  }
  return res;
}

inline OracleResult k_terminal_oracle(const GenericGraph& g, OracleMode mode = OracleMode::numeric,
                                      unsigned threads = 1) {
  return k_terminal_oracle(g, g.terminals, mode, threads);
}

/// Graph with edge e removed.
inline GenericGraph delete_edge(const GenericGraph& g, std::size_t e) {
  GenericGraph h = g;
  h.edges.erase(h.edges.begin() + static_cast<std::ptrdiff_t>(e));
  return h;
}

/**
 * Graph with edge e contracted: its endpoints merge into one node whose
 * reliability is the product of theirs; parallel edges are kept. The merged
 * product is exact for the deletion-contraction identity only when both
 * endpoints are perfect.
 */
inline GenericGraph contract_edge(const GenericGraph& g, std::size_t e) {
  const std::size_t u = std::min(g.edges[e].u, g.edges[e].v), v = std::max(g.edges[e].u, g.edges[e].v);
  GenericGraph h;
  std::vector<std::size_t> map(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (i == v) continue;
    RelValue rel = g.nodes[i].rel;
    std::string name = g.nodes[i].name;
    if (i == u) {
      rel = rel * g.nodes[v].rel;
      name += "+" + g.nodes[v].name;
    }
    map[i] = h.add_node(name, rel);
  }
  map[v] = map[u];
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    if (j == e) continue;
    const auto& ed = g.edges[j];
    if (map[ed.u] == map[ed.v]) continue;  // becomes a loop, irrelevant for connectivity
    h.add_edge(map[ed.u], map[ed.v], ed.rel, ed.name);
  }
  for (auto t : g.terminals) {
    auto m = map[t];
    if (std::find(h.terminals.begin(), h.terminals.end(), m) == h.terminals.end()) h.terminals.push_back(m);
  }
  return h;
}

/**
 * F-basis coefficients: poly(p) = sum_i F_i p^(D-i) (1-p)^i.
 * With u = (1-p)/p this reads p^D Q(u), Q(u) = sum_k c_k (1+u)^(D-k).
 */
inline std::vector<Rational> coefficient_spectrum(const UniPoly<Rational>& poly, int D) {
  if (poly.degree() > D) throw InputError("polynomial degree exceeds the F-basis size");
  std::vector<Rational> F(static_cast<std::size_t>(D) + 1, Rational(0));
  // binomial rows of (1+u)^m
  for (int k = 0; k <= poly.degree(); ++k) {
    const Rational& ck = poly.coeffs()[static_cast<std::size_t>(k)];
    if (ck.is_zero()) continue;
    const int m = D - k;
    mpz_class binom = 1;
    for (int i = 0; i <= m; ++i) {
      F[static_cast<std::size_t>(i)] += ck * Rational(binom);
      binom = binom * (m - i) / (i + 1);
    }
  }
  return F;
}

}  // namespace netrel
