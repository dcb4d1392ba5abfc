#pragma once

#include <memory>

#include "versalkit/algebra.hpp"
#include "versalkit/determinants.hpp"

struct ChSetup {
  vk::GroupModel m;
  std::shared_ptr<const vk::AssocAlgebra> group_alg;
  vk::ChAlgebra ch;
  vk::Vec e1, e2;
};

inline ChSetup build_ch(const vk::GroupModel& m, const vk::DeterminantPair& det) {
  auto GA = std::make_shared<const vk::AssocAlgebra>(vk::AssocAlgebra::group_algebra(m.G, det.A));
  vk::ChAlgebra ch = vk::ch_quotient(GA, det);
  vk::Vec e1 = vk::character_idempotent(ch.alg(), m.H, m.chi1);
  vk::Vec e2 = vk::character_idempotent(ch.alg(), m.H, m.chi2);
  return {m, GA, std::move(ch), e1, e2};
}

inline ChSetup build_ch_split(const vk::GroupModel& m, vk::RingPtr R = nullptr) {
  if (!R) R = std::make_shared<const vk::LocalRing>(vk::LocalRing::residue_field(m.k));
  return build_ch(m, vk::split_pair(m, R));
}

// two-sided ideal spanned by gens, saturated under multiplication by every basis element
inline int saturated_ideal_dim(const vk::AssocAlgebra& A, const std::vector<vk::Vec>& gens) {
  vk::EchelonSpace span(A.field(), A.dim());
  std::vector<vk::Vec> basis;
  for (const auto& g : gens)
    if (span.add(g)) basis.push_back(g);
  for (size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < A.dim(); ++j)
      for (const auto& w : {A.mul(A.basis(j), basis[i]), A.mul(basis[i], A.basis(j))})
        if (span.add(w)) basis.push_back(w);
  return span.dim();
}
