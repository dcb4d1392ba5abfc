#include "versalkit/determinants.hpp"

#include <stdexcept>

namespace vk {

RingPtr dual_numbers(const Field& k) {
  return std::make_shared<const LocalRing>(LocalRing::artinian(k, {"e"}, {parse_poly("e^2", {"e"}, k)}));
}

namespace {

Vec residual_trace(const GroupModel& m) {
  Vec t0(m.G->order());
  for (int g = 0; g < m.G->order(); ++g) t0[g] = m.k.add(m.chi1[g], m.chi2[g]);
  return t0;
}

Vec residual_det(const GroupModel& m) {
  Vec d0(m.G->order());
  for (int g = 0; g < m.G->order(); ++g) d0[g] = m.k.mul(m.chi1[g], m.chi2[g]);
  return d0;
}

void require_dual(const LocalRing& D) {
  if (D.dim() != 2 || D.nvars() != 1) throw std::invalid_argument("coefficient ring must be the dual numbers k[e]");
}

std::shared_ptr<const AssocAlgebra> group_algebra_ptr(GroupPtr G, RingPtr R) {
  return std::make_shared<const AssocAlgebra>(AssocAlgebra::group_algebra(std::move(G), std::move(R)));
}

}  // namespace

DeterminantPair pair_from_tangent(const GroupModel& m, const TangentVector& v, RingPtr D) {
  require_dual(*D);
  Vec t0 = residual_trace(m), d0 = residual_det(m);
  DeterminantPair det{m.G, D, {}, {}};
  auto e = D->variable(0);
  for (int g = 0; g < m.G->order(); ++g) {
    det.t.push_back(D->add(D->scalar(t0[g]), D->scale(v.t1[g], e)));
    det.d.push_back(D->add(D->scalar(d0[g]), D->scale(v.d1[g], e)));
  }
  return det;
}

TangentVector tangent_of_pair(const GroupModel& m, const DeterminantPair& det) {
  require_dual(*det.A);
  TangentVector v;
  for (int g = 0; g < m.G->order(); ++g) {
    v.t1.push_back(det.t[g][1]);
    v.d1.push_back(det.d[g][1]);
  }
  return v;
}

Vec flatten(const TangentVector& v) {
  Vec out = v.t1;
  out.insert(out.end(), v.d1.begin(), v.d1.end());
  return out;
}

TangentVector tangent_add(const Field& k, const TangentVector& a, const TangentVector& b) {
  TangentVector r = a;
  axpy(k, 1, b.t1, r.t1);
  axpy(k, 1, b.d1, r.d1);
  return r;
}

TangentSpace tangent_space(const GroupModel& m) {
  const FiniteGroup& G = *m.G;
  const Field& k = m.k;
  int n = G.order();
  TangentSpace ts;
  auto cls = G.conjugacy_classes(&ts.classes);
  ts.hom_basis = cocycle_space(m, std::vector<int>(n, 1)).cocycles;
  int nc = ts.classes, nh = static_cast<int>(ts.hom_basis.size()), u = nc + nh;
  Vec t0 = residual_trace(m), d0 = residual_det(m);
  EchelonSpace eqs(k, u);
  eqs.add(unit_vector(u, cls[G.identity()]));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Vec row(u, 0);
      int gih = G.mul(G.inv(g), h);
      auto bump = [&](int col, int c) { row[col] = k.add(row[col], c); };
      bump(cls[gih], d0[g]);
      bump(cls[h], k.neg(t0[g]));
      bump(cls[g], k.neg(t0[h]));
      bump(cls[G.mul(g, h)], 1);
      for (int j = 0; j < nh; ++j) bump(nc + j, k.mul(k.mul(d0[g], ts.hom_basis[j][g]), t0[gih]));
      eqs.add(row);
    }
  for (const auto& sol : nullspace(k, eqs.rows(), u)) {
    TangentVector v{Vec(n), Vec(n, 0)};
    for (int g = 0; g < n; ++g) v.t1[g] = sol[cls[g]];
    for (int j = 0; j < nh; ++j)
      for (int g = 0; g < n; ++g) v.d1[g] = k.add(v.d1[g], k.mul(sol[nc + j], k.mul(d0[g], ts.hom_basis[j][g])));
    ts.basis.push_back(std::move(v));
  }
  return ts;
}

bool is_multiplicative(const FiniteGroup& G, const Field& k, const CharacterLift& xi) {
  int n = G.order();
  if (xi.chi0[G.identity()] != 1 || xi.chi1[G.identity()] != 0) return false;
  return !kernels::first_failing_pair(n, n, [&](int g, int h) {
            int gh = G.mul(g, h);
            return xi.chi0[gh] == k.mul(xi.chi0[g], xi.chi0[h]) &&
                   xi.chi1[gh] == k.add(k.mul(xi.chi0[g], xi.chi1[h]), k.mul(xi.chi1[g], xi.chi0[h]));
          }).found;
}

CharacterLift character_deformation(const Vec& chi, const Vec& phi, const Field& k) {
  CharacterLift xi{chi, Vec(chi.size())};
  for (size_t g = 0; g < chi.size(); ++g) xi.chi1[g] = k.mul(chi[g], phi[g]);
  return xi;
}

TangentVector first_arrow(const FiniteGroup& G, const Field& k, const CharacterLift& xi1, const CharacterLift& xi2) {
  if (!is_multiplicative(G, k, xi1) || !is_multiplicative(G, k, xi2))
    throw std::invalid_argument("character lifts are not multiplicative");
  int n = G.order();
  TangentVector v{Vec(n), Vec(n)};
  for (int g = 0; g < n; ++g) {
    v.t1[g] = k.add(xi1.chi1[g], xi2.chi1[g]);
    v.d1[g] = k.add(k.mul(xi1.chi0[g], xi2.chi1[g]), k.mul(xi1.chi1[g], xi2.chi0[g]));
  }
  return v;
}

std::vector<TangentVector> first_arrow_image(const GroupModel& m) {
  int n = m.G->order();
  auto hom = cocycle_space(m, std::vector<int>(n, 1)).cocycles;
  CharacterLift x1{m.chi1, Vec(n, 0)}, x2{m.chi2, Vec(n, 0)};
  std::vector<TangentVector> out;
  for (const auto& phi : hom) {
    out.push_back(first_arrow(*m.G, m.k, character_deformation(m.chi1, phi, m.k), x2));
    out.push_back(first_arrow(*m.G, m.k, x1, character_deformation(m.chi2, phi, m.k)));
  }
  return out;
}

CharacterRecovery character_recovery(const GroupModel& m, const DeterminantPair& det) {
  require_dual(*det.A);
  auto ch = ch_quotient(group_algebra_ptr(det.G, det.A), det);
  const AssocAlgebra& A = ch.alg();
  Vec e1 = character_idempotent(A, m.H, m.chi1), e2 = character_idempotent(A, m.H, m.chi2);
  CharacterRecovery r;
  int n = m.G->order();
  for (auto* out : {&r.xi1, &r.xi2}) {
    const Vec& e = out == &r.xi1 ? e1 : e2;
    out->chi0.resize(n);
    out->chi1.resize(n);
    for (int g = 0; g < n; ++g) {
      auto v = ch.trace(A.mul(e, ch.image(g)));
      out->chi0[g] = v[0];
      out->chi1[g] = v[1];
    }
  }
  r.mult1 = is_multiplicative(*m.G, m.k, r.xi1) && r.xi1.chi0 == m.chi1;
  r.mult2 = is_multiplicative(*m.G, m.k, r.xi2) && r.xi2.chi0 == m.chi2;
  return r;
}

LastArrow last_arrow(const GroupModel& m, const DeterminantPair& det) {
  require_dual(*det.A);
  const LocalRing& D = *det.A;
  const Field& k = m.k;
  auto ch = ch_quotient(group_algebra_ptr(det.G, det.A), det);
  const AssocAlgebra& A = ch.alg();
  Vec e1 = character_idempotent(A, m.H, m.chi1), e2 = character_idempotent(A, m.H, m.chi2);
  GmaFrame f = gma_frame(A, e1, e2, ch.trace_fn());
  LastArrow r;
  r.c = f.c;
  r.psi1 = f.psi1;
  r.psi2 = f.psi2;
  if (D.residue(f.c) != 0) throw FrameError("frame scalar is not in the maximal ideal");
  r.lambda = f.c[1];

  auto eps = D.variable(0);
  r.lift_invariant = true;
  for (int mu = 0; mu < k.size() && r.lift_invariant; ++mu)
    for (int nu = 0; nu < k.size() && r.lift_invariant; ++nu) {
      Vec p12 = A.rscale(D.add(D.one(), D.scale(mu, eps)), f.phi12);
      Vec p21 = A.rscale(D.add(D.one(), D.scale(nu, eps)), f.phi21);
      auto c2 = solve_scalar(A, e2, A.mul(p21, p12));
      r.lift_invariant = c2 && *c2 == f.c;
    }

  // independent route through the residual frame and its cocycles
  auto Rk = std::make_shared<const LocalRing>(LocalRing::residue_field(k));
  auto chk = ch_quotient(group_algebra_ptr(m.G, Rk), split_pair(m, Rk));
  const AssocAlgebra& Ak = chk.alg();
  Vec k1 = character_idempotent(Ak, m.H, m.chi1), k2 = character_idempotent(Ak, m.H, m.chi2);
  GmaFrame fk = gma_frame(Ak, k1, k2, chk.trace_fn());
  if (fk.psi1 != f.psi1 || fk.psi2 != f.psi2) {
    r.trace_route = false;
    return r;
  }
  auto cd = cocycle_extraction(Ak, fk, m);
  int n = m.G->order();
  std::vector<Vec> left(n), right(n);
  for (int g = 0; g < n; ++g) {
    left[g] = A.mul(A.mul(e2, ch.image(g)), e1);
    right[g] = A.mul(A.mul(e1, ch.image(g)), e2);
  }
  r.trace_route = !kernels::first_failing_pair(n, n, [&](int g, int h) {
                     auto v = ch.trace(A.mul(left[g], right[h]));
                     return v[0] == 0 && v[1] == k.mul(r.lambda, k.mul(cd.c21[g], cd.c12[h]));
                   }).found;
  return r;
}

std::optional<int> trace_lambda(const GroupModel& m, const DeterminantPair& det) {
  require_dual(*det.A);
  const LocalRing& D = *det.A;
  const FiniteGroup& G = *m.G;
  const Field& k = m.k;
  int n = G.order();
  auto Rk = std::make_shared<const LocalRing>(LocalRing::residue_field(k));
  auto chk = ch_quotient(group_algebra_ptr(m.G, Rk), split_pair(m, Rk));
  const AssocAlgebra& Ak = chk.alg();
  GmaFrame fk = gma_frame(Ak, character_idempotent(Ak, m.H, m.chi1), character_idempotent(Ak, m.H, m.chi2),
                          chk.trace_fn());
  auto cd = cocycle_extraction(Ak, fk, m);

  int inv_h = k.inv(k.from_int(static_cast<long long>(m.H.size())));
  std::vector<std::pair<int, int>> idem[2];
  for (int h : m.H) {
    idem[0].push_back({h, k.mul(inv_h, k.inv(m.chi1[h]))});
    idem[1].push_back({h, k.mul(inv_h, k.inv(m.chi2[h]))});
  }
  // e_i g e_j as a sparse element of k[G]
  auto sandwich = [&](int i, int g, int j) {
    std::vector<int> out(n, 0);
    for (auto [a, ca] : idem[i])
      for (auto [b, cb] : idem[j]) {
        int x = G.mul(G.mul(a, g), b);
        out[x] = k.add(out[x], k.mul(ca, cb));
      }
    std::vector<std::pair<int, int>> sp;
    for (int x = 0; x < n; ++x)
      if (out[x]) sp.push_back({x, out[x]});
    return sp;
  };
  std::vector<std::vector<std::pair<int, int>>> left(n), right(n);
  for (int g = 0; g < n; ++g) {
    left[g] = sandwich(1, g, 0);
    right[g] = sandwich(0, g, 1);
  }
  std::vector<int> form(static_cast<size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      auto v = D.zero();
      for (auto [x, cx] : left[g])
        for (auto [y, cy] : right[h]) v = D.add(v, D.scale(k.mul(cx, cy), det.t[G.mul(x, y)]));
      if (v[0] != 0) return std::nullopt;
      form[static_cast<size_t>(g) * n + h] = v[1];
    }
  int lambda = 0;
  bool fixed = false;
  for (int g = 0; g < n && !fixed; ++g)
    for (int h = 0; h < n && !fixed; ++h) {
      int w = k.mul(cd.c21[g], cd.c12[h]);
      if (w) {
        lambda = k.div(form[static_cast<size_t>(g) * n + h], w);
        fixed = true;
      }
    }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (form[static_cast<size_t>(g) * n + h] != k.mul(lambda, k.mul(cd.c21[g], cd.c12[h]))) return std::nullopt;
  return lambda;
}

TeichReport teichmuller_restriction(const DeterminantPair& det, const GroupModel& m) {
  const LocalRing& A = *det.A;
  TeichReport r;
  for (int h : m.H) {
    bool ok = det.t[h] == A.scalar(m.k.add(m.chi1[h], m.chi2[h])) && det.d[h] == A.scalar(m.k.mul(m.chi1[h], m.chi2[h]));
    if (!ok) {
      r.pass = false;
      r.failing.push_back(h);
    }
  }
  return r;
}

LocalRing::Elem map_to_quotient(const LocalRing& A, const LocalRing& B, const LocalRing::Elem& a) {
  return B.from_poly(A.to_poly(a));
}

Reducibility reducibility_test(const DeterminantPair& det, const GroupModel& m, const std::vector<LocalRing::Elem>& J) {
  const LocalRing& A = *det.A;
  const FiniteGroup& G = *m.G;
  const Field& k = m.k;
  Reducibility r;
  r.quotient = std::make_shared<const LocalRing>(A.quotient(J));
  const LocalRing& B = *r.quotient;
  int n = G.order();
  std::vector<LocalRing::Elem> t(n), d(n);
  for (int g = 0; g < n; ++g) {
    t[g] = map_to_quotient(A, B, det.t[g]);
    d[g] = map_to_quotient(A, B, det.d[g]);
  }
  // a decomposition restricts on H to the Teichmuller lifts, which forces
  // psi1(g) = t(e1 g) = (1/|H|) sum chi1(h) t(h^-1 g)
  int inv_h = k.inv(k.from_int(static_cast<long long>(m.H.size())));
  r.psi1.assign(n, B.zero());
  r.psi2.assign(n, B.zero());
  for (int g = 0; g < n; ++g) {
    auto s = B.zero();
    for (int h : m.H) s = B.add(s, B.scale(m.chi1[h], t[G.mul(G.inv(h), g)]));
    r.psi1[g] = B.scale(inv_h, s);
    r.psi2[g] = B.sub(t[g], r.psi1[g]);
  }
  for (int g = 0; g < n; ++g) {
    if (B.residue(r.psi1[g]) != m.chi1[g] || B.residue(r.psi2[g]) != m.chi2[g]) {
      r.reason = "candidate does not lift (chi1, chi2) at " + G.name(g);
      return r;
    }
    if (B.mul(r.psi1[g], r.psi2[g]) != d[g]) {
      r.reason = "d differs from psi1 psi2 at " + G.name(g);
      return r;
    }
  }
  for (const auto* psi : {&r.psi1, &r.psi2}) {
    auto w = kernels::first_failing_pair(n, n, [&](int g, int h) {
      return (*psi)[G.mul(g, h)] == B.mul((*psi)[g], (*psi)[h]);
    });
    if (w.found) {
      r.reason = std::string(psi == &r.psi1 ? "psi1" : "psi2") + " is not multiplicative at (" + G.name(w.a) + ", " +
                 G.name(w.b) + ")";
      return r;
    }
  }
  r.split = true;
  return r;
}

ExactnessReport tangent_exactness(const GroupModel& m) {
  const Field& k = m.k;
  int n = m.G->order();
  ExactnessReport r;
  auto gen = genericity_check(m);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.ext[i][j] = gen.ext[i][j];
  auto ts = tangent_space(m);
  r.dim = ts.dim();
  std::vector<Vec> image;
  for (const auto& v : first_arrow_image(m)) image.push_back(flatten(v));
  r.image_dim = rank(k, image, 2 * n);
  auto D = dual_numbers(k);
  auto lambda_of = [&](const TangentVector& v) {
    auto det = pair_from_tangent(m, v, D);
    try {
      return last_arrow(m, det).lambda;
    } catch (const FrameError&) {
      ++r.frame_failures;
      auto l = trace_lambda(m, det);
      if (!l) throw FrameError("trace form is not a multiple of c21 x c12");
      return *l;
    }
  };
  for (const auto& v : ts.basis) r.lambdas.push_back(lambda_of(v));
  std::vector<Vec> kernel;
  for (const auto& a : nullspace(k, {r.lambdas}, r.dim)) {
    Vec flat(2 * n, 0);
    for (int i = 0; i < r.dim; ++i)
      if (a[i]) axpy(k, a[i], flatten(ts.basis[i]), flat);
    kernel.push_back(flat);
  }
  if (r.dim == 0) kernel.clear();
  r.kernel_dim = static_cast<int>(kernel.size());
  r.kernel_equals_image = same_span(k, kernel, image, 2 * n);
  int lo = r.ext[0][0] + r.ext[1][1];
  r.sandwich = lo <= r.dim && r.dim <= lo + r.ext[0][1] * r.ext[1][0];
  r.lambda_linear = true;
  if (r.dim >= 2) {
    TangentVector s = ts.basis[0];
    int expected = r.lambdas[0];
    for (int i = 1; i < r.dim; ++i) {
      s = tangent_add(k, s, ts.basis[i]);
      expected = k.add(expected, r.lambdas[i]);
    }
    r.lambda_linear = lambda_of(s) == expected;
  }
  return r;
}

}  // namespace vk
