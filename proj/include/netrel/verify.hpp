#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "netrel/delta_wye.hpp"
#include "netrel/graph_families.hpp"
#include "netrel/oracle.hpp"
#include "netrel/transfer.hpp"

namespace netrel {

struct SuiteResult {
  std::string suite;
  Family family = Family::bc;
  int n = 0;
  int checks = 0;
  bool ok = true;
  std::string detail;  // first mismatch
};

struct VerifyOptions {
  int max_n = 6;
  int trials = 20;
  std::uint64_t seed = 1;
  int symbolic_max_n = 4;
  unsigned threads = 1;
  /// Test hook: applied to every numeric transfer chain before contraction.
  std::function<void(TransferChain<Rational>&)> mutate;
};

namespace detail {

/// Rational in [0,1] with denominator at most 12.
inline Rational random_unit_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dd(1, 12);
  const int d = dd(rng);
  std::uniform_int_distribution<int> nd(0, d);
  return Rational(nd(rng), d);
}

inline std::vector<std::string> element_keys(Family f, int n) {
  std::vector<std::string> k;
  for (int i = 0; i <= n; ++i) k.push_back("S" + std::to_string(i));
  if (f == Family::bc) {
    for (int i = 1; i <= n; ++i) k.push_back("b" + std::to_string(i));
    for (int i = 2; i <= n; ++i) k.push_back("a" + std::to_string(i));
  } else {
    for (int i = 1; i <= n; ++i) k.push_back("a" + std::to_string(i));
    for (int i = 0; i <= n; ++i) k.push_back("b" + std::to_string(i));
    k.push_back("T");
  }
  return k;
}

inline ExplicitSpec random_spec(Family f, int n, std::mt19937_64& rng) {
  ExplicitSpec s;
  for (const auto& k : element_keys(f, n)) s.values[k] = MPoly(random_unit_rational(rng));
  return s;
}

inline Rational transfer_value(Family f, int n, const ElementSpec& spec, const VerifyOptions& o) {
  if (f == Family::bc) {
    auto ch = bc_chain<Rational>(build_ladder(n, spec));
    if (o.mutate) o.mutate(ch);
    return ch.contract();
  }
  auto ch = fan_chain<Rational>(build_fan(n, spec));
  if (o.mutate) o.mutate(ch);
  return ch.contract();
}

inline Rational allterm_value(Family f, int n, const ElementSpec& spec, const VerifyOptions& o) {
  if (f == Family::bc) {
    auto ch = allterm_chain<Rational>(build_ladder(n, spec));
    if (o.mutate) o.mutate(ch);
    return ch.contract();
  }
  auto ch = allterm_chain<Rational>(build_fan(n, spec));
  if (o.mutate) o.mutate(ch);
  return ch.contract();
}

inline GenericGraph generic_of(Family f, int n, const ElementSpec& spec) {
  return f == Family::bc ? to_generic(build_ladder(n, spec)) : to_generic(build_fan(n, spec));
}

inline std::string spec_text(const ExplicitSpec& s) {
  std::string out;
  for (const auto& [k, v] : s.values) out += (out.empty() ? "" : " ") + k + "=" + v.to_string();
  return out;
}

}  // namespace detail

/// Transfer two-terminal and all-terminal values against the oracle at random rational points.
inline std::vector<SuiteResult> suite_oracle_equivalence(Family f, const VerifyOptions& o) {
  std::vector<SuiteResult> out;
  std::mt19937_64 rng(o.seed);
  for (int n = 0; n <= o.max_n; ++n) {
    SuiteResult r{"oracle-equivalence", f, n, 0, true, {}};
    for (int t = 0; t < o.trials; ++t) {
      ExplicitSpec spec = detail::random_spec(f, n, rng);
      GenericGraph g = detail::generic_of(f, n, spec);
      Rational x = detail::transfer_value(f, n, spec, o);
      Rational y = k_terminal_oracle(g, OracleMode::numeric, o.threads).numeric();
      ++r.checks;
      if (x != y && r.ok) {
        r.ok = false;
        r.detail = "rel2 transfer " + x.str() + " vs oracle " + y.str() + " at " + detail::spec_text(spec);
      }
      if (n >= 1 || f == Family::fan) {
        Rational xa = detail::allterm_value(f, n, spec, o);
        Rational ya = k_terminal_oracle(with_all_terminals(g), OracleMode::numeric, o.threads).numeric();
        ++r.checks;
        if (xa != ya && r.ok) {
          r.ok = false;
          r.detail = "relA transfer " + xa.str() + " vs oracle " + ya.str() + " at " + detail::spec_text(spec);
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Fully symbolic equality with a distinct symbol per element.
inline std::vector<SuiteResult> suite_symbolic_identity(Family f, const VerifyOptions& o) {
  std::vector<SuiteResult> out;
  for (int n = 0; n <= o.symbolic_max_n; ++n) {
    SuiteResult r{"symbolic-identity", f, n, 0, true, {}};
    const ElementSpec spec = DistinctSymbols{};
    MPoly x = f == Family::bc ? rel2_bc<MPoly>(build_ladder(n, spec)) : rel2_fan<MPoly>(build_fan(n, spec));
    GenericGraph g = detail::generic_of(f, n, spec);
    MPoly y = k_terminal_oracle(g, OracleMode::symbolic_full, o.threads).value;
    ++r.checks;
    if (x != y) {
      r.ok = false;
      r.detail = "transfer - oracle = " + (x - y).to_string();
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Rel(x = t) = (1 - t) Rel(x = 0) + t Rel(x = 1) for a random element x and random t.
inline std::vector<SuiteResult> suite_affinity(Family f, const VerifyOptions& o) {
  std::vector<SuiteResult> out;
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int n = 1; n <= o.max_n; ++n) {
    SuiteResult r{"affinity", f, n, 0, true, {}};
    const auto keys = detail::element_keys(f, n);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    for (int t = 0; t < o.trials; ++t) {
      ExplicitSpec spec = detail::random_spec(f, n, rng);
      const std::string key = keys[pick(rng)];
      const Rational tv = detail::random_unit_rational(rng);
      auto at = [&](const Rational& v) {
        ExplicitSpec s = spec;
        s.values[key] = MPoly(v);
        return detail::transfer_value(f, n, s, o);
      };
      const Rational lhs = at(tv);
      const Rational rhs = (Rational(1) - tv) * at(Rational(0)) + tv * at(Rational(1));
      ++r.checks;
      if (lhs != rhs && r.ok) {
        r.ok = false;
        r.detail = "element " + key + " at t=" + tv.str() + ": " + lhs.str() + " vs " + rhs.str();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

/**
 * Triangle-to-star equivalence on the bare triangle and on a triangle with
 * pendant trees (the setting in which the star is exact with imperfect nodes).
 */
inline std::vector<SuiteResult> suite_delta_wye(const VerifyOptions& o) {
  std::vector<SuiteResult> out;
  std::mt19937_64 rng(o.seed ^ 0x5bd1e995ULL);
  auto pos = [&] {
    Rational x = detail::random_unit_rational(rng);
    return x.is_zero() ? Rational(1, 13) : x;
  };
  for (int variant = 0; variant < 2; ++variant) {
    SuiteResult r{variant == 0 ? "delta-wye (triangle)" : "delta-wye (pendant trees)", Family::bc, 2, 0, true, {}};
    for (int t = 0; t < o.trials; ++t) {
      TriangleConfig<Rational> tc{pos(), pos(), pos(), pos(), pos(), pos()};
      TriangleEmbedding emb = embed_triangle(tc);
      if (variant == 1) {
        auto d = emb.graph.add_node("D", RelValue(pos()));
        auto e = emb.graph.add_node("E", RelValue(pos()));
        auto f2 = emb.graph.add_node("F", RelValue(pos()));
        emb.graph.add_edge(emb.A, d, RelValue(pos()), "AD");
        emb.graph.add_edge(emb.C, e, RelValue(pos()), "CE");
        emb.graph.add_edge(e, f2, RelValue(pos()), "EF");
      }
      StarConfig s = triangle_to_star(tc);
      EquivalenceReport rep = verify_equivalence(tc, s, emb);
      r.checks += rep.checks;
      if (!rep.ok && r.ok) {
        r.ok = false;
        r.detail = rep.mismatches.front();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<SuiteResult> run_verify_suites(const std::vector<Family>& families, const VerifyOptions& o) {
  std::vector<SuiteResult> all;
  auto append = [&](std::vector<SuiteResult> v) { all.insert(all.end(), v.begin(), v.end()); };
  for (Family f : families) {
    append(suite_oracle_equivalence(f, o));
    append(suite_symbolic_identity(f, o));
    append(suite_affinity(f, o));
  }
  append(suite_delta_wye(o));
  return all;
}

}  // namespace netrel
