#pragma once

// Composition factors of Sym^m k^2 (x) det^a for GL2(F_p), computed from
// explicit matrices over F_p. Used as an oracle for vk::decompose.

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "versalkit/field.hpp"
#include "versalkit/linalg.hpp"
#include "versalkit/weights.hpp"

namespace oracle {

using vk::Field;
using vk::Matrix;
using vk::Vec;

struct Module {
  int dim = 0;
  std::vector<Matrix> gens;  // images of diag(g,1), diag(1,g), [[1,1],[0,1]], [[0,1],[1,0]]
};

inline std::vector<std::array<int, 4>> group_generators(const Field& k) {
  int g = k.primitive();
  return {{g, 0, 0, 1}, {1, 0, 0, g}, {1, 1, 0, 1}, {0, 1, 1, 0}};
}

// basis x^u y^(m-u); (x, y) -> (x, y) M
inline Matrix sym_matrix(const Field& k, int m, int a, const std::array<int, 4>& M) {
  int al = M[0], be = M[1], ga = M[2], de = M[3];
  int det = k.sub(k.mul(al, de), k.mul(be, ga));
  int scal = k.pow(det, a);
  Matrix out(m + 1, m + 1);
  for (int u = 0; u <= m; ++u) {
    // (al x + ga y)^u (be x + de y)^(m-u), coefficients indexed by x-degree
    std::vector<int> poly{1};
    auto times = [&](int cx, int cy) {
      std::vector<int> nxt(poly.size() + 1, 0);
      for (size_t i = 0; i < poly.size(); ++i) {
        nxt[i + 1] = k.add(nxt[i + 1], k.mul(poly[i], cx));
        nxt[i] = k.add(nxt[i], k.mul(poly[i], cy));
      }
      poly = nxt;
    };
    for (int i = 0; i < u; ++i) times(al, ga);
    for (int i = u; i < m; ++i) times(be, de);
    for (int v = 0; v <= m; ++v) out(v, u) = k.mul(scal, poly[v]);
  }
  return out;
}

inline Module sym_module(const Field& k, int m, int a) {
  Module mod;
  mod.dim = m + 1;
  for (auto& g : group_generators(k)) mod.gens.push_back(sym_matrix(k, m, a, g));
  return mod;
}

// basis of the submodule generated by v
inline std::vector<Vec> spin(const Field& k, const Module& M, const Vec& v) {
  vk::EchelonSpace span(k, M.dim);
  std::vector<Vec> basis;
  if (span.add(v)) basis.push_back(v);
  for (size_t i = 0; i < basis.size(); ++i)
    for (auto& g : M.gens) {
      Vec w = vk::mat_vec(k, g, basis[i]);
      if (span.add(w)) basis.push_back(w);
    }
  return basis;
}

// action on the span of basis, which must be invariant
inline Module restrict_to(const Field& k, const Module& M, const std::vector<Vec>& basis) {
  Module out;
  out.dim = static_cast<int>(basis.size());
  for (auto& g : M.gens) {
    Matrix r(out.dim, out.dim);
    for (int j = 0; j < out.dim; ++j) {
      auto c = vk::solve_combination(k, basis, vk::mat_vec(k, g, basis[j]));
      if (!c) throw std::logic_error("subspace not invariant");
      for (int i = 0; i < out.dim; ++i) r(i, j) = (*c)[i];
    }
    out.gens.push_back(r);
  }
  return out;
}

inline Module quotient_by(const Field& k, const Module& M, const std::vector<Vec>& sub) {
  std::vector<Vec> full = sub;
  vk::EchelonSpace span(k, M.dim);
  for (auto& v : sub) span.add(v);
  std::vector<Vec> comp;
  for (int i = 0; i < M.dim; ++i) {
    Vec e = vk::unit_vector(M.dim, i);
    if (span.add(e)) {
      comp.push_back(e);
      full.push_back(e);
    }
  }
  Module out;
  out.dim = static_cast<int>(comp.size());
  int s = static_cast<int>(sub.size());
  for (auto& g : M.gens) {
    Matrix r(out.dim, out.dim);
    for (int j = 0; j < out.dim; ++j) {
      auto c = vk::solve_combination(k, full, vk::mat_vec(k, g, comp[j]));
      for (int i = 0; i < out.dim; ++i) r(i, j) = (*c)[s + i];
    }
    out.gens.push_back(r);
  }
  return out;
}

// all nonzero vectors of the span of basis, up to scalars
inline std::vector<Vec> projective_points(const Field& k, const std::vector<Vec>& basis) {
  std::vector<Vec> out;
  int d = static_cast<int>(basis.size());
  int q = k.size();
  for (int lead = 0; lead < d; ++lead) {
    long long count = 1;
    for (int i = lead + 1; i < d; ++i) count *= q;
    for (long long code = 0; code < count; ++code) {
      Vec v = basis[lead];
      long long c = code;
      for (int i = lead + 1; i < d; ++i) {
        vk::axpy(k, static_cast<int>(c % q), basis[i], v);
        c /= q;
      }
      out.push_back(v);
    }
  }
  return out;
}

// joint eigenspaces of the two torus generators
inline std::vector<std::vector<Vec>> weight_spaces(const Field& k, const Module& M) {
  std::vector<std::vector<Vec>> out;
  for (int l1 = 1; l1 < k.size(); ++l1)
    for (int l2 = 1; l2 < k.size(); ++l2) {
      std::vector<Vec> rows;
      for (int t = 0; t < 2; ++t) {
        int l = t == 0 ? l1 : l2;
        for (int i = 0; i < M.dim; ++i) {
          Vec r(M.dim);
          for (int j = 0; j < M.dim; ++j) r[j] = M.gens[t](i, j);
          r[i] = k.sub(r[i], l);
          rows.push_back(r);
        }
      }
      auto ns = vk::nullspace(k, rows, M.dim);
      if (!ns.empty()) out.push_back(ns);
    }
  return out;
}

// an irreducible submodule: the smallest spin of a torus weight vector
inline std::vector<Vec> minimal_submodule(const Field& k, const Module& M) {
  std::vector<Vec> best;
  for (auto& ws : weight_spaces(k, M))
    for (auto& v : projective_points(k, ws)) {
      auto s = spin(k, M, v);
      if (best.empty() || s.size() < best.size()) best = s;
      if (best.size() == 1) return best;
    }
  if (best.empty()) throw std::logic_error("no weight vector");
  return best;
}

inline bool isomorphic(const Field& k, const Module& A, const Module& B) {
  if (A.dim != B.dim) return false;
  int n = A.dim;
  // X A_g = B_g X, unknowns X(i, j) at i * n + j
  std::vector<Vec> rows;
  for (size_t g = 0; g < A.gens.size(); ++g)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec r(n * n, 0);
        for (int l = 0; l < n; ++l) {
          r[i * n + l] = k.add(r[i * n + l], A.gens[g](l, j));
          r[l * n + j] = k.sub(r[l * n + j], B.gens[g](i, l));
        }
        rows.push_back(r);
      }
  return !vk::nullspace(k, rows, n * n).empty();
}

inline vk::SerreWeight identify(const Field& k, const Module& S) {
  int p = k.characteristic();
  int r = S.dim - 1;
  if (r > p - 1) throw std::logic_error("factor too large");
  for (int s = 0; s < p - 1; ++s)
    if (isomorphic(k, S, sym_module(k, r, s))) return {r, s};
  throw std::logic_error("unidentified factor");
}

inline vk::MultiplicityTable composition_factors(const Field& k, Module M) {
  vk::MultiplicityTable out;
  while (M.dim > 0) {
    auto sub = minimal_submodule(k, M);
    out[identify(k, restrict_to(k, M, sub))] += 1;
    M = quotient_by(k, M, sub);
  }
  return out;
}

}  // namespace oracle
