#include "versalkit/det_pair.hpp"

#include <stdexcept>

namespace vk {

DeterminantPair split_pair(const GroupModel& m, RingPtr A) {
  if (!(A->field() == m.k)) throw std::invalid_argument("coefficient ring has a different residue field");
  DeterminantPair det{m.G, A, {}, {}};
  for (int g = 0; g < m.G->order(); ++g) {
    det.t.push_back(A->scalar(m.k.add(m.chi1[g], m.chi2[g])));
    det.d.push_back(A->scalar(m.k.mul(m.chi1[g], m.chi2[g])));
  }
  return det;
}

DetReport validate(const DeterminantPair& det, const GroupModel* model, kernels::Mode mode) {
  const FiniteGroup& G = *det.G;
  const LocalRing& A = *det.A;
  const Field& k = A.field();
  int n = G.order();
  DetReport r;
  auto fail = [&r](std::string axiom, int g, int h, std::string detail) {
    r.pass = false;
    r.axiom = std::move(axiom);
    r.g = g;
    r.h = h;
    r.detail = std::move(detail);
    return r;
  };
  if (static_cast<int>(det.t.size()) != n || static_cast<int>(det.d.size()) != n)
    return fail("shape", -1, -1, "t and d must be given on every group element");
  for (int g = 0; g < n; ++g)
    if (!A.is_unit(det.d[g])) return fail("d unit", g, -1, "d(" + G.name(g) + ") is not a unit");
  if (det.t[G.identity()] != A.scalar(k.from_int(2))) return fail("t(1) = 2", G.identity(), -1, "t(1) differs from 2");
  auto w = kernels::first_failing_pair(
      n, n, [&](int g, int h) { return det.d[G.mul(g, h)] == A.mul(det.d[g], det.d[h]); }, mode);
  if (w.found) return fail("d multiplicative", w.a, w.b, "d(gh) differs from d(g) d(h)");
  if (model) {
    for (int g = 0; g < n; ++g) {
      if (A.residue(det.t[g]) != k.add(model->chi1[g], model->chi2[g]))
        return fail("residual", g, -1, "t(" + G.name(g) + ") is not congruent to chi1 + chi2");
      if (A.residue(det.d[g]) != k.mul(model->chi1[g], model->chi2[g]))
        return fail("residual", g, -1, "d(" + G.name(g) + ") is not congruent to chi1 chi2");
    }
  }
  w = kernels::first_failing_pair(
      n, n, [&](int g, int h) { return det.t[G.mul(g, h)] == det.t[G.mul(h, g)]; }, mode);
  if (w.found) return fail("(ii)", w.a, w.b, "t(gh) differs from t(hg)");
  w = kernels::first_failing_pair(
      n, n,
      [&](int g, int h) {
        auto lhs = A.add(A.sub(A.mul(det.d[g], det.t[G.mul(G.inv(g), h)]), A.mul(det.t[g], det.t[h])),
                         det.t[G.mul(g, h)]);
        return A.is_zero(lhs);
      },
      mode);
  if (w.found) return fail("(iii)", w.a, w.b, "d(g) t(g^-1 h) - t(g) t(h) + t(gh) is nonzero");
  return r;
}

DeterminantPair from_rep(const MatrixRep& rho) {
  if (rho.dim != 2) throw std::invalid_argument("representation must be 2-dimensional");
  DeterminantPair det{rho.G, rho.R, {}, {}};
  for (const auto& m : rho.images) {
    det.t.push_back(rmat_trace(*rho.R, m, 2));
    det.d.push_back(rmat_det2(*rho.R, m));
  }
  auto r = validate(det);
  if (!r.pass) throw std::logic_error("trace and determinant fail " + r.axiom + ": " + r.detail);
  return det;
}

}  // namespace vk
