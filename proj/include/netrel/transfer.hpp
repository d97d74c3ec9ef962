#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "netrel/errors.hpp"
#include "netrel/graph_families.hpp"
#include "netrel/matrix.hpp"
#include "netrel/mpoly.hpp"

namespace netrel {

enum class MatrixKind { BC4, BC3, FAN4, FAN3, ALLTERM2 };

inline std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::BC4: return "BC4";
    case MatrixKind::BC3: return "BC3";
    case MatrixKind::FAN4: return "FAN4";
    case MatrixKind::FAN3: return "FAN3";
    case MatrixKind::ALLTERM2: return "ALLTERM2";
  }
  return "?";
}

inline std::size_t dimension(MatrixKind k) {
  switch (k) {
    case MatrixKind::BC4:
    case MatrixKind::FAN4: return 4;
    case MatrixKind::BC3:
    case MatrixKind::FAN3: return 3;
    case MatrixKind::ALLTERM2: return 2;
  }
  return 0;
}

template <class R>
struct TransferMatrix {
  MatrixKind kind;
  Matrix<R> m;
};

/// Ladder stage k: a = a_k, b = b_k, S = S_{k-1}.
template <class R>
TransferMatrix<R> bc4_matrix(const R& a, const R& b, const R& S) {
  const R z(0), ab = a * b, abS = ab * S;
  return {MatrixKind::BC4,
          Matrix<R>{{z, z, S, z},
                    {abS, abS, z, abS},
                    {a, a * S, b * S, abS},
                    {R(z - abS), R(z - abS), R(z - b * S), R(a * (R(1) - R(2) * b) * S)}}};
}

template <class R>
TransferMatrix<R> bc3_matrix(const R& a, const R& b) {
  const R z(0), ab = a * b;
  return {MatrixKind::BC3,
          Matrix<R>{{ab, R(1), ab}, {a, b, ab}, {R(z - ab), R(z - b), R(a * (R(1) - R(2) * b))}}};
}

/// Fan stage k: a = a_k, b = b_k, S = S_k.
template <class R>
TransferMatrix<R> fan4_matrix(const R& a, const R& b, const R& S) {
  const R z(0), abS = a * b * S;
  return {MatrixKind::FAN4,
          Matrix<R>{{R(a * S), z, z, z},
                    {z, R(a * S), R(b * S), abS},
                    {abS, abS, R(1), abS},
                    {R(z - abS), R(z - abS), R(z - b * S), R(a * (R(1) - R(2) * b) * S)}}};
}

template <class R>
TransferMatrix<R> fan3_matrix(const R& a, const R& b) {
  const R z(0), ab = a * b;
  return {MatrixKind::FAN3,
          Matrix<R>{{a, b, ab}, {ab, R(1), ab}, {R(z - ab), R(z - b), R(a * (R(1) - R(2) * b))}}};
}

template <class R>
TransferMatrix<R> allterm2_matrix(const R& a, const R& b) {
  return {MatrixKind::ALLTERM2,
          Matrix<R>{{R(a + b), R(a * b)}, {R(R(1) - a - R(2) * b), R(a * (R(1) - R(2) * b))}}};
}

/**
 * \brief prefactor * left * matrices[0] * ... * matrices.back() * right.
 *
 * matrices are stored in written order, so the rightmost one (the first
 * stage) is applied first.
 */
template <class R>
struct TransferChain {
  std::vector<R> left;
  std::vector<TransferMatrix<R>> matrices;
  std::vector<R> right;
  R prefactor = R(1);

  R contract() const {
    std::vector<R> v = right;
    for (auto it = matrices.rbegin(); it != matrices.rend(); ++it) {
      const auto& m = it->m;
      if (m.cols() != v.size()) throw std::logic_error("transfer chain dimension mismatch");
      std::vector<R> w(m.rows(), R(0));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (!(m(i, j) == R(0)) && !(v[j] == R(0))) w[i] = w[i] + m(i, j) * v[j];
      v = std::move(w);
    }
    if (left.size() != v.size()) throw std::logic_error("transfer chain dimension mismatch");
    R s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s = s + left[i] * v[i];
    return prefactor * s;
  }
};

/// Converts an element reliability into the evaluation ring.
template <class R>
R ring_cast(const RelValue& v) {
  if constexpr (std::is_same_v<R, MPoly>) {
    return v;
  } else if constexpr (std::is_same_v<R, Rational>) {
    return v.constant_value();
  } else {
    static_assert(std::is_same_v<R, MPoly>, "unsupported ring for element reliabilities");
  }
}

template <class R>
std::vector<R> unit_vector(std::size_t n, std::size_t i) {
  std::vector<R> v(n, R(0));
  v[i] = R(1);
  return v;
}

/// Ladder chain: S_n (0 0 1 0) M_n ... M_1 (0 0 1 0)^T with a_1 = 0.
template <class R>
TransferChain<R> bc_chain(const LadderInstance& inst) {
  TransferChain<R> ch;
  ch.left = unit_vector<R>(4, 2);
  ch.right = unit_vector<R>(4, 2);
  ch.prefactor = ring_cast<R>(inst.S.at(inst.n));
  for (int k = inst.n; k >= 1; --k) {
    R a = k == 1 ? R(0) : ring_cast<R>(inst.a.at(k));
    ch.matrices.push_back(bc4_matrix<R>(a, ring_cast<R>(inst.b.at(k)), ring_cast<R>(inst.S.at(k - 1))));
  }
  return ch;
}

/// Perfect-node ladder chain (node values are ignored).
template <class R>
TransferChain<R> bc_perfect_chain(const LadderInstance& inst) {
  TransferChain<R> ch;
  ch.left = unit_vector<R>(3, 1);
  ch.right = unit_vector<R>(3, 1);
  for (int k = inst.n; k >= 1; --k) {
    R a = k == 1 ? R(0) : ring_cast<R>(inst.a.at(k));
    ch.matrices.push_back(bc3_matrix<R>(a, ring_cast<R>(inst.b.at(k))));
  }
  return ch;
}

/// Fan chain: (1 T 0 0) M^_n ... M^_0 (1 0 0 0)^T with a_0 = 1.
template <class R>
TransferChain<R> fan_chain(const FanInstance& inst) {
  TransferChain<R> ch;
  ch.left = {R(1), ring_cast<R>(inst.T_rel), R(0), R(0)};
  ch.right = unit_vector<R>(4, 0);
  for (int k = inst.n; k >= 0; --k) {
    R a = k == 0 ? R(1) : ring_cast<R>(inst.a.at(k));
    ch.matrices.push_back(fan4_matrix<R>(a, ring_cast<R>(inst.b.at(k)), ring_cast<R>(inst.S.at(k))));
  }
  return ch;
}

/// Perfect-node fan chain (node and hub values are ignored).
template <class R>
TransferChain<R> fan_perfect_chain(const FanInstance& inst) {
  TransferChain<R> ch;
  ch.left = unit_vector<R>(3, 0);
  ch.right = unit_vector<R>(3, 0);
  for (int k = inst.n; k >= 0; --k) {
    R a = k == 0 ? R(1) : ring_cast<R>(inst.a.at(k));
    ch.matrices.push_back(fan3_matrix<R>(a, ring_cast<R>(inst.b.at(k))));
  }
  return ch;
}

/**
 * All-terminal chain from the pivotal decomposition on the last stage,
 * (1, 0) M~_n ... M~_1 (1, 0)^T with a_1 = 0, times the product of node
 * reliabilities (every node must be up). Index n is the terminal index, so
 * n = 2 is the triangle.
 */
template <class R>
TransferChain<R> allterm_chain(const LadderInstance& inst) {
  if (inst.n < 1) throw InputError("all-terminal reliability needs n >= 1");
  TransferChain<R> ch;
  ch.left = unit_vector<R>(2, 0);
  ch.right = unit_vector<R>(2, 0);
  R nodes(1);
  for (const auto& [i, s] : inst.S) nodes = nodes * ring_cast<R>(s);
  ch.prefactor = nodes;
  for (int k = inst.n; k >= 1; --k) {
    R a = k == 1 ? R(0) : ring_cast<R>(inst.a.at(k));
    ch.matrices.push_back(allterm2_matrix<R>(a, ring_cast<R>(inst.b.at(k))));
  }
  return ch;
}

/// Fan all-terminal chain: the same recursion with fan stage k at ladder stage k+1.
template <class R>
TransferChain<R> allterm_chain(const FanInstance& inst) {
  TransferChain<R> ch;
  ch.left = unit_vector<R>(2, 0);
  ch.right = unit_vector<R>(2, 0);
  R nodes = ring_cast<R>(inst.T_rel);
  for (const auto& [i, s] : inst.S) nodes = nodes * ring_cast<R>(s);
  ch.prefactor = nodes;
  for (int k = inst.n; k >= 0; --k) {
    R a = k == 0 ? R(0) : ring_cast<R>(inst.a.at(k));
    ch.matrices.push_back(allterm2_matrix<R>(a, ring_cast<R>(inst.b.at(k))));
  }
  return ch;
}

template <class R>
R rel2_bc(const LadderInstance& inst) {
  return bc_chain<R>(inst).contract();
}
template <class R>
R rel2_bc_perfect(const LadderInstance& inst) {
  return bc_perfect_chain<R>(inst).contract();
}
template <class R>
R rel2_fan(const FanInstance& inst) {
  return fan_chain<R>(inst).contract();
}
template <class R>
R rel2_fan_perfect(const FanInstance& inst) {
  return fan_perfect_chain<R>(inst).contract();
}
template <class R>
R relA(const LadderInstance& inst) {
  return allterm_chain<R>(inst).contract();
}
template <class R>
R relA(const FanInstance& inst) {
  return allterm_chain<R>(inst).contract();
}

/// M(p, rho): the ladder stage matrix with every edge p and node rho.
template <class R>
Matrix<R> bc_uniform_matrix(const R& p, const R& rho) {
  return bc4_matrix<R>(p, p, rho).m;
}
template <class R>
Matrix<R> fan_uniform_matrix(const R& p, const R& rho) {
  return fan4_matrix<R>(p, p, rho).m;
}
template <class R>
Matrix<R> bc_perfect_uniform_matrix(const R& p) {
  return bc3_matrix<R>(p, p).m;
}
template <class R>
Matrix<R> allterm_uniform_matrix(const R& p) {
  return allterm2_matrix<R>(p, p).m;
}

/**
 * Uniform two-terminal reliabilities for n = 0..nmax, sharing the running
 * matrix-vector product between consecutive n. Works over any ring R
 * (Rational, MPoly, or polynomials in p).
 */
template <class R>
std::vector<R> rel2_uniform_sequence(Family family, int nmax, const R& p, const R& rho) {
  std::vector<R> out;
  if (nmax < 0) return out;
  auto apply = [](const Matrix<R>& m, const std::vector<R>& v) {
    std::vector<R> w(m.rows(), R(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!(m(i, j) == R(0)) && !(v[j] == R(0))) w[i] = w[i] + m(i, j) * v[j];
    return w;
  };
  if (family == Family::bc) {
    const Matrix<R> M = bc_uniform_matrix<R>(p, rho);
    std::vector<R> v = unit_vector<R>(4, 2);
    for (int n = 0; n <= nmax; ++n) {
      if (n > 0) v = apply(M, v);
      out.push_back(rho * v[2]);
    }
  } else {
    const Matrix<R> M = fan_uniform_matrix<R>(p, rho);
    std::vector<R> v = apply(fan4_matrix<R>(R(1), p, rho).m, unit_vector<R>(4, 0));
    for (int n = 0; n <= nmax; ++n) {
      if (n > 0) v = apply(M, v);
      out.push_back(v[0] + rho * v[1]);
    }
  }
  return out;
}

template <class R>
R rel2_uniform(Family family, int n, const R& p, const R& rho) {
  if (n < 0) throw InputError("n must be >= 0");
  return rel2_uniform_sequence<R>(family, n, p, rho).back();
}

/// Perfect-node uniform two-terminal reliabilities for n = 0..nmax (3x3 chains).
template <class R>
std::vector<R> rel2_perfect_uniform_sequence(Family family, int nmax, const R& p) {
  std::vector<R> out;
  if (nmax < 0) return out;
  auto apply = [](const Matrix<R>& m, const std::vector<R>& v) {
    std::vector<R> w(m.rows(), R(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) w[i] = w[i] + m(i, j) * v[j];
    return w;
  };
  if (family == Family::bc) {
    const Matrix<R> M = bc_perfect_uniform_matrix<R>(p);
    std::vector<R> v = unit_vector<R>(3, 1);
    for (int n = 0; n <= nmax; ++n) {
      if (n > 0) v = apply(M, v);
      out.push_back(v[1]);
    }
  } else {
    const Matrix<R> M = fan3_matrix<R>(p, p).m;
    std::vector<R> v = apply(fan3_matrix<R>(R(1), p).m, unit_vector<R>(3, 0));
    for (int n = 0; n <= nmax; ++n) {
      if (n > 0) v = apply(M, v);
      out.push_back(v[0]);
    }
  }
  return out;
}

/// Uniform all-terminal reliabilities R_1..R_nmax (index = terminal index).
template <class R>
std::vector<R> relA_uniform_sequence(int nmax, const R& p) {
  std::vector<R> out;
  const Matrix<R> M = allterm_uniform_matrix<R>(p);
  std::vector<R> v = {R(p), R(R(1) - R(2) * p)};  // M~_1 (1,0)^T with a_1 = 0
  for (int n = 1; n <= nmax; ++n) {
    if (n > 1) v = {R(M(0, 0) * v[0] + M(0, 1) * v[1]), R(M(1, 0) * v[0] + M(1, 1) * v[1])};
    out.push_back(v[0]);
  }
  return out;
}

}  // namespace netrel
