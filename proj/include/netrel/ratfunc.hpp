#pragma once

#include <vector>

#include "netrel/errors.hpp"
#include "netrel/unipoly.hpp"

namespace netrel {

/**
 * Maclaurin coefficients z^0..z^order of N/D over any ring in which D(0)
 * divides exactly (fields, or MPoly with a constant D(0)).
 */
template <class R>
std::vector<R> series_expand(const UniPoly<R>& num, const UniPoly<R>& den, std::size_t order) {
  const R d0 = den.coeff(0);
  if (d0 == R(0)) throw Error("pole at origin");
  std::vector<R> c;
  c.reserve(order + 1);
  const std::size_t dd = den.is_zero() ? 0 : static_cast<std::size_t>(den.degree());
  for (std::size_t k = 0; k <= order; ++k) {
    R acc = num.coeff(k);
    for (std::size_t j = 1; j <= dd && j <= k; ++j) acc = acc - den.coeff(j) * c[k - j];
    c.push_back(exact_div(acc, d0));
  }
  return c;
}

/**
 * \brief N(z)/D(z) over a field K, normalized so that D(0) = 1.
 */
template <class K>
class RationalFunction {
 public:
  RationalFunction(UniPoly<K> num, UniPoly<K> den, bool reduce = true)
      : n_(std::move(num)), d_(std::move(den)) {
    if (d_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (reduce) {
      UniPoly<K> g = gcd(n_, d_);
      if (g.degree() > 0) {
        n_ = divmod(n_, g).first;
        d_ = divmod(d_, g).first;
      }
    }
    K d0 = d_.coeff(0);
    if (!(d0 == K(0))) {
      K inv = K(1) / d0;
      n_ = inv * n_;
      d_ = inv * d_;
    }
  }

  const UniPoly<K>& numerator() const { return n_; }
  const UniPoly<K>& denominator() const { return d_; }

  /// Maclaurin coefficients z^0..z^order.
  std::vector<K> series(std::size_t order) const { return series_expand(n_, d_, order); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.n_ * b.d_ == b.n_ * a.d_;
  }

 private:
  UniPoly<K> n_, d_;
};

template <class K>
std::vector<K> series_expand(const RationalFunction<K>& f, std::size_t order) {
  return f.series(order);
}

}  // namespace netrel
