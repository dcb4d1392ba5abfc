#pragma once

// Brute-force references used by the unit tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <vector>

#include "versalkit/groups.hpp"

namespace brute {

// q^dim Z^1(G, k(psi)), by extending every assignment on a generating set
inline long long cocycle_count(const vk::GroupModel& m, const std::vector<int>& psi) {
  const vk::FiniteGroup& G = *m.G;
  const vk::Field& k = m.k;
  std::vector<int> gens = G.generators();
  int q = k.size(), n = G.order();
  long long total = 1;
  for (size_t i = 0; i < gens.size(); ++i) total *= q;
  long long count = 0;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> f(n, -1);
    f[G.identity()] = 0;
    long long c = code;
    std::vector<int> val(gens.size());
    for (auto& v : val) {
      v = static_cast<int>(c % q);
      c /= q;
    }
    std::vector<int> queue{G.identity()};
    bool ok = true;
    for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
      int g = queue[qi];
      for (size_t s = 0; s < gens.size(); ++s) {
        int gs = G.mul(g, gens[s]);
        int v = k.add(f[g], k.mul(psi[g], val[s]));
        if (f[gs] < 0) {
          f[gs] = v;
          queue.push_back(gs);
        } else if (f[gs] != v) {
          ok = false;
          break;
        }
      }
    }
    for (int g = 0; g < n && ok; ++g)
      for (int h = 0; h < n && ok; ++h)
        ok = f[G.mul(g, h)] == k.add(f[g], k.mul(psi[g], f[h]));
    if (ok) ++count;
  }
  return count;
}

inline long long coboundary_count(const vk::GroupModel& m, const std::vector<int>& psi) {
  const vk::Field& k = m.k;
  std::vector<std::vector<int>> seen;
  for (int a = 0; a < k.size(); ++a) {
    std::vector<int> b;
    for (int g = 0; g < m.G->order(); ++g) b.push_back(k.sub(k.mul(psi[g], a), a));
    if (std::find(seen.begin(), seen.end(), b) == seen.end()) seen.push_back(b);
  }
  return static_cast<long long>(seen.size());
}

inline int log_q(long long v, int q) {
  int d = 0;
  while (v > 1) {
    v /= q;
    ++d;
  }
  return d;
}

inline int ext_dimension(const vk::GroupModel& m, int i, int j) {
  auto psi = vk::twist(m, i, j);
  return log_q(cocycle_count(m, psi) / coboundary_count(m, psi), m.k.size());
}

// the same model with its elements listed in another order
inline vk::GroupModel permuted_model(const vk::GroupModel& m, const std::vector<int>& perm) {
  vk::GroupModel out = m;
  out.G = std::make_shared<const vk::FiniteGroup>(m.G->permuted(perm));
  std::vector<int> where(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) where[perm[i]] = static_cast<int>(i);
  for (auto& x : out.P) x = where[x];
  for (auto& x : out.H) x = where[x];
  for (size_t i = 0; i < perm.size(); ++i) {
    out.h_part[i] = where[m.h_part[perm[i]]];
    out.chi1[i] = m.chi1[perm[i]];
    out.chi2[i] = m.chi2[perm[i]];
  }
  for (auto& [name, g] : out.named) g = where[g];
  return out;
}

}  // namespace brute
