#pragma once

#include <string>
#include <vector>

#include "versalkit/groups.hpp"

namespace vk {

// 2-dimensional determinant (t, d): G -> A.
struct DeterminantPair {
  GroupPtr G;
  RingPtr A;
  std::vector<LocalRing::Elem> t;
  std::vector<LocalRing::Elem> d;
};

struct DetReport {
  bool pass = true;
  std::string axiom;  // first failing check
  int g = -1;
  int h = -1;
  std::string detail;
};

// (chi1 + chi2, chi1 chi2) over A through the structure map k -> A
DeterminantPair split_pair(const GroupModel& m, RingPtr A);
// checks, in order: d(g) unit, t(1) = 2, d multiplicative, residual congruence
// (when a model is given), t(gh) = t(hg), d(g) t(g^-1 h) - t(g) t(h) + t(gh) = 0
DetReport validate(const DeterminantPair& det, const GroupModel* model = nullptr,
                   kernels::Mode mode = kernels::Mode::Parallel);
// (tr rho, det rho); throws when the result fails validation
DeterminantPair from_rep(const MatrixRep& rho);

}  // namespace vk
