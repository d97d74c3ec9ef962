#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netrel/errors.hpp"
#include "netrel/rational.hpp"
#include "netrel/unipoly.hpp"

namespace netrel {

namespace detail {

inline int base_symbol_rank(std::string_view s) {
  static const char* const order[] = {"p", "rho", "z", "x", "T"};
  for (int i = 0; i < 5; ++i)
    if (s == order[i]) return i;
  return 5;
}

// Splits "S12" into ("S", 12); symbols without a numeric suffix get index -1.
inline std::pair<std::string_view, long> split_index(std::string_view s) {
  std::size_t k = s.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
  if (k == s.size() || k == 0) return {s, -1};
  return {s.substr(0, k), std::stol(std::string(s.substr(k)))};
}

}  // namespace detail

/// Global canonical symbol order: p, rho, z, x, T, then (index, prefix).
inline bool symbol_less(std::string_view a, std::string_view b) {
  int ra = detail::base_symbol_rank(a), rb = detail::base_symbol_rank(b);
  if (ra != rb) return ra < rb;
  if (ra < 5) return false;
  auto [pa, ia] = detail::split_index(a);
  auto [pb, ib] = detail::split_index(b);
  if (ia != ib) return ia < ib;
  if (pa != pb) return pa < pb;
  return a < b;
}

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic comparison (total degree first, then leftmost variable).
inline bool grlex_less(const Exponents& a, const Exponents& b) {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}

struct GrLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_less(a, b); }
};

/**
 * \brief Sparse multivariate polynomial with Rational coefficients.
 *
 * Canonical form: variables sorted by symbol_less and all actually used,
 * terms sorted by grlex_less ascending, no zero coefficients.
 */
class MPoly {
 public:
  struct Term {
    Exponents exps;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MPoly() = default;
  MPoly(const Rational& c) {  // NOLINT(implicit)
    if (!c.is_zero()) terms_.push_back({{}, c});
  }
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(implicit)
  MPoly(int c) : MPoly(Rational(c)) {}   // NOLINT(implicit)

  static MPoly symbol(const std::string& name) {
    MPoly m;
    m.vars_ = {name};
    m.terms_.push_back({{1}, Rational(1)});
    return m;
  }
  static MPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
    MPoly m;
    m.vars_ = std::move(vars);
    m.terms_ = std::move(terms);
    m.canonicalize();
    return m;
  }
  /// Parses expressions such as "p^2*(1-rho) - 3/4*T".
  static MPoly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool has_variable(const std::string& v) const {
    return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
  }
  Rational constant_value() const {
    if (!is_constant()) throw InputError("polynomial is not a constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.front().coeff;
  }
  /// Coefficient of the constant monomial.
  Rational constant_term() const {
    if (!terms_.empty() && total(terms_.front().exps) == 0) return terms_.front().coeff;
    return Rational(0);
  }

  int degree(const std::string& var) const {
    int idx = index_of(var);
    if (idx < 0) return is_zero() ? -1 : 0;
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(t.exps[static_cast<std::size_t>(idx)]));
    return d;
  }
  int total_degree() const {
    int d = is_zero() ? -1 : 0;
    for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(total(t.exps)));
    return d;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return combine(a, b, Rational(1)); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return combine(a, b, Rational(-1)); }
  friend MPoly operator-(const MPoly& a) {
    MPoly r = a;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MPoly pow(unsigned e) const {
    MPoly r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  MPoly substitute(const std::map<std::string, Rational>& bindings) const;
  MPoly substitute(const std::map<std::string, MPoly>& bindings) const;
  MPoly derivative(const std::string& var) const;

  /// View as a polynomial in var with coefficients in the remaining variables.
  UniPoly<MPoly> as_univariate(const std::string& var) const;
  /// Same, requiring no other variables.
  UniPoly<Rational> as_qpoly(const std::string& var) const;
  static MPoly from_univariate(const UniPoly<MPoly>& u, const std::string& var);
  static MPoly from_qpoly(const UniPoly<Rational>& u, const std::string& var);

  /// Exact quotient if divisor divides *this, throws otherwise.
  MPoly divide_exact(const MPoly& divisor) const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const MPoly& m) { return os << m.to_string(); }

 private:
  static std::uint64_t total(const Exponents& e) {
    std::uint64_t s = 0;
    for (auto x : e) s += x;
    return s;
  }
  int index_of(const std::string& v) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == v) return static_cast<int>(i);
    return -1;
  }
  static std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                              const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
               [](const std::string& x, const std::string& y) { return symbol_less(x, y); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  // Maps each variable position of `from` to its position in `to`.
  static std::vector<std::size_t> remap(const std::vector<std::string>& from,
                                        const std::vector<std::string>& to) {
    std::vector<std::size_t> m(from.size());
    for (std::size_t i = 0; i < from.size(); ++i)
      m[i] = static_cast<std::size_t>(std::find(to.begin(), to.end(), from[i]) - to.begin());
    return m;
  }
  static Exponents lift(const Exponents& e, const std::vector<std::size_t>& m, std::size_t n) {
    Exponents out(n, 0);
    for (std::size_t i = 0; i < e.size(); ++i) out[m[i]] = e[i];
    return out;
  }
  static MPoly combine(const MPoly& a, const MPoly& b, const Rational& sign);
  void canonicalize();

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

inline void MPoly::canonicalize() {
  // sort variables
  std::vector<std::size_t> order(vars_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return symbol_less(vars_[x], vars_[y]); });
  std::map<Exponents, Rational, GrLexLess> acc;
  for (auto& t : terms_) {
    if (t.exps.size() != vars_.size()) throw std::logic_error("exponent length mismatch");
    Exponents e(vars_.size());
    for (std::size_t i = 0; i < order.size(); ++i) e[i] = t.exps[order[i]];
    auto [it, fresh] = acc.try_emplace(std::move(e), t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  std::vector<std::string> vars(vars_.size());
  for (std::size_t i = 0; i < order.size(); ++i) vars[i] = vars_[order[i]];
  // merge duplicated names, drop unused
  std::vector<bool> used(vars.size(), false);
  for (const auto& [e, c] : acc)
    if (!c.is_zero())
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) used[i] = true;
  std::vector<std::string> keep;
  std::vector<std::size_t> target(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!used[i]) continue;
    if (keep.empty() || keep.back() != vars[i]) keep.push_back(vars[i]);
    target[i] = keep.size() - 1;
  }
  std::map<Exponents, Rational, GrLexLess> fin;
  for (const auto& [e, c] : acc) {
    if (c.is_zero()) continue;
    Exponents f(keep.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) f[target[i]] += e[i];
    auto [it, fresh] = fin.try_emplace(std::move(f), c);
    if (!fresh) it->second += c;
  }
  vars_ = std::move(keep);
  terms_.clear();
  for (auto& [e, c] : fin)
    if (!c.is_zero()) terms_.push_back({e, c});
}

inline MPoly MPoly::combine(const MPoly& a, const MPoly& b, const Rational& sign) {
  if (b.is_zero()) return a;
  if (a.is_zero()) {
    MPoly r = b;
    if (sign.sign() < 0) r = -r;
    return r;
  }
  MPoly r;
  r.vars_ = merged_vars(a.vars_, b.vars_);
  auto ma = remap(a.vars_, r.vars_), mb = remap(b.vars_, r.vars_);
  const std::size_t n = r.vars_.size();
  std::vector<Term> la, lb;
  la.reserve(a.terms_.size());
  lb.reserve(b.terms_.size());
  for (const auto& t : a.terms_) la.push_back({lift(t.exps, ma, n), t.coeff});
  for (const auto& t : b.terms_) lb.push_back({lift(t.exps, mb, n), sign * t.coeff});
  // lifting preserves relative grlex order, so a linear merge suffices
  std::size_t i = 0, j = 0;
  while (i < la.size() || j < lb.size()) {
    if (j == lb.size() || (i < la.size() && grlex_less(la[i].exps, lb[j].exps))) {
      r.terms_.push_back(std::move(la[i++]));
    } else if (i == la.size() || grlex_less(lb[j].exps, la[i].exps)) {
      r.terms_.push_back(std::move(lb[j++]));
    } else {
      Rational c = la[i].coeff + lb[j].coeff;
      if (!c.is_zero()) r.terms_.push_back({std::move(la[i].exps), c});
      ++i;
      ++j;
    }
  }
  // drop variables that cancelled out
  std::vector<bool> used(n, false);
  for (const auto& t : r.terms_)
    for (std::size_t k = 0; k < n; ++k)
      if (t.exps[k]) used[k] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) r.canonicalize();
  return r;
}

inline MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.is_constant()) {
    MPoly r = b;
    const Rational c = a.terms_.front().coeff;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  if (b.is_constant()) return b * a;
  MPoly r;
  r.vars_ = MPoly::merged_vars(a.vars_, b.vars_);
  auto ma = MPoly::remap(a.vars_, r.vars_), mb = MPoly::remap(b.vars_, r.vars_);
  const std::size_t n = r.vars_.size();
  std::vector<Exponents> eb;
  eb.reserve(b.terms_.size());
  for (const auto& t : b.terms_) eb.push_back(MPoly::lift(t.exps, mb, n));
  std::map<Exponents, Rational, GrLexLess> acc;
  for (const auto& ta : a.terms_) {
    Exponents ea = MPoly::lift(ta.exps, ma, n);
    for (std::size_t j = 0; j < b.terms_.size(); ++j) {
      Exponents e = ea;
      for (std::size_t k = 0; k < n; ++k) e[k] += eb[j][k];
      Rational c = ta.coeff * b.terms_[j].coeff;
      auto [it, fresh] = acc.try_emplace(std::move(e), std::move(c));
      if (!fresh) it->second += ta.coeff * b.terms_[j].coeff;
    }
  }
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({e, c});
  r.canonicalize();
  return r;
}

inline MPoly MPoly::substitute(const std::map<std::string, Rational>& bindings) const {
  std::map<std::string, MPoly> m;
  for (const auto& [k, v] : bindings) m.emplace(k, MPoly(v));
  return substitute(m);
}

inline MPoly MPoly::substitute(const std::map<std::string, MPoly>& bindings) const {
  std::vector<int> bound(vars_.size(), -1);
  std::vector<const MPoly*> vals(vars_.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (auto it = bindings.find(vars_[i]); it != bindings.end()) {
      vals[i] = &it->second;
      any = true;
    }
  if (!any) return *this;
  // cache powers per bound variable
  std::vector<std::vector<MPoly>> powers(vars_.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const MPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MPoly(1));
    while (pw.size() <= e) pw.push_back(pw.back() * *vals[i]);
    return pw[e];
  };
  // group terms by their free part to limit the number of products
  std::map<Exponents, MPoly> grouped;
  std::vector<std::string> free_vars;
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (!vals[i]) {
      free_vars.push_back(vars_[i]);
      free_idx.push_back(i);
    }
  for (const auto& t : terms_) {
    MPoly v(t.coeff);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vals[i] && t.exps[i]) v = v * power(i, t.exps[i]);
    Exponents fe;
    for (auto i : free_idx) fe.push_back(t.exps[i]);
    grouped[fe] += v;
  }
  MPoly out;
  for (auto& [fe, v] : grouped) {
    if (v.is_zero()) continue;
    MPoly mono = from_terms(free_vars, {{fe, Rational(1)}});
    out += mono * v;
  }
  return out;
}

inline MPoly MPoly::derivative(const std::string& var) const {
  int idx = index_of(var);
  if (idx < 0) return MPoly();
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    auto e = t.exps[static_cast<std::size_t>(idx)];
    if (!e) continue;
    Term d = t;
    d.exps[static_cast<std::size_t>(idx)] = e - 1;
    d.coeff *= Rational(static_cast<long>(e));
    ts.push_back(std::move(d));
  }
  return from_terms(vars_, std::move(ts));
}

inline UniPoly<MPoly> MPoly::as_univariate(const std::string& var) const {
  int idx = index_of(var);
  if (idx < 0) return UniPoly<MPoly>(*this);
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (static_cast<int>(i) != idx) rest.push_back(vars_[i]);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree(var)) + 1);
  for (const auto& t : terms_) {
    Exponents e;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (static_cast<int>(i) != idx) e.push_back(t.exps[i]);
    buckets[t.exps[static_cast<std::size_t>(idx)]].push_back({std::move(e), t.coeff});
  }
  std::vector<MPoly> cs;
  for (auto& b : buckets) cs.push_back(from_terms(rest, std::move(b)));
  return UniPoly<MPoly>(std::move(cs));
}

inline UniPoly<Rational> MPoly::as_qpoly(const std::string& var) const {
  for (const auto& v : vars_)
    if (v != var) throw InputError("polynomial has extra variable '" + v + "': " + to_string());
  std::vector<Rational> cs(static_cast<std::size_t>(std::max(degree(var), 0)) + 1, Rational(0));
  for (const auto& t : terms_) cs[t.exps.empty() ? 0 : t.exps[0]] = t.coeff;
  return UniPoly<Rational>(std::move(cs));
}

inline MPoly MPoly::from_univariate(const UniPoly<MPoly>& u, const std::string& var) {
  MPoly out, x = symbol(var), xp(1);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero()) out += u[i] * xp;
    xp = xp * x;
  }
  return out;
}

inline MPoly MPoly::from_qpoly(const UniPoly<Rational>& u, const std::string& var) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero()) ts.push_back({{static_cast<std::uint32_t>(i)}, u[i]});
  return from_terms({var}, std::move(ts));
}

inline MPoly MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (divisor.is_constant()) {
    MPoly r = *this;
    Rational c = divisor.constant_value();
    for (auto& t : r.terms_) t.coeff /= c;
    return r;
  }
  MPoly rem = *this, quo;
  const std::vector<std::string> all = merged_vars(vars_, divisor.vars_);
  const auto& lt = divisor.terms_.back();
  const Exponents dl = lift(lt.exps, remap(divisor.vars_, all), all.size());
  while (!rem.is_zero()) {
    const auto& rt = rem.terms_.back();
    Exponents rl = lift(rt.exps, remap(rem.vars_, all), all.size());
    Exponents q(all.size());
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (rl[k] < dl[k]) throw std::domain_error("inexact multivariate division");
      q[k] = rl[k] - dl[k];
    }
    MPoly mono = from_terms(all, {{q, rt.coeff / lt.coeff}});
    quo += mono;
    rem -= mono * divisor;
  }
  return quo;
}

inline MPoly exact_div(const MPoly& a, const MPoly& b) { return a.divide_exact(b); }

inline std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->coeff;
    bool unit = total(it->exps) > 0;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool printed = false;
    if (!unit || !a.is_one()) {
      os << a.str();
      printed = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!it->exps[i]) continue;
      if (printed) os << "*";
      os << vars_[i];
      if (it->exps[i] > 1) os << "^" << it->exps[i];
      printed = true;
    }
  }
  return os.str();
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}
  MPoly run() {
    MPoly r = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("expression parse error at offset " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  MPoly sum() {
    MPoly acc;
    bool neg = false;
    skip();
    if (eat('-')) neg = true;
    else eat('+');
    acc = product();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+')) acc += product();
      else if (eat('-')) acc -= product();
      else break;
    }
    return acc;
  }
  MPoly product() {
    MPoly acc = power();
    while (true) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        MPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc * MPoly(Rational(1) / d.constant_value());
      } else {
        skip();
        // implicit multiplication: "2p" or ")("
        if (i_ < s_.size() && (s_[i_] == '(' || std::isalpha(static_cast<unsigned char>(s_[i_]))))
          acc = acc * power();
        else
          break;
      }
    }
    return acc;
  }
  MPoly power() {
    MPoly b = atom();
    if (eat('^')) {
      skip();
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("exponent must be a nonnegative integer");
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(st, i_ - st)))));
    }
    return b;
  }
  MPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      MPoly r = sum();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    if (c == '-') {
      ++i_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t st = i_;
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
      return MPoly(Rational::parse(s_.substr(st, i_ - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      return MPoly::symbol(std::string(s_.substr(st, i_ - st)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline MPoly MPoly::parse(std::string_view text) { return detail::ExprParser(text).run(); }

inline MPoly sym(const std::string& name) { return MPoly::symbol(name); }

}  // namespace netrel
