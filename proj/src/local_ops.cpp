#include "versalkit/local_ops.hpp"

#include <algorithm>

#include "versalkit/algebra.hpp"
#include "versalkit/kernels.hpp"

namespace vk {

LocalRing retruncate(const LocalRing& R, int N) {
  return LocalRing::truncated(R.field(), R.vars(), R.generators(), N);
}

HilbertSamuelData fit_lengths(const std::vector<long long>& lengths, int nvars) {
  int N = static_cast<int>(lengths.size());
  HilbertSamuelData hs;
  hs.lengths = lengths;
  std::vector<long long> diff = lengths;
  for (int d = 0; d <= nvars && !diff.empty(); ++d) {
    int n = static_cast<int>(diff.size());
    int s = n - 1;
    while (s > 0 && diff[s - 1] == diff[n - 1]) --s;
    if (diff[n - 1] > 0 && n - s >= d + 2) {
      hs.dim = d;
      hs.mult = diff[n - 1];
      // Newton form through the last d + 1 lengths, walked back while it still agrees
      std::vector<std::vector<long long>> table{lengths};
      for (int j = 1; j <= d; ++j) {
        std::vector<long long> next;
        for (size_t i = 0; i + 1 < table.back().size(); ++i) next.push_back(table.back()[i + 1] - table.back()[i]);
        table.push_back(next);
      }
      int base = N - 1 - d;
      auto poly = [&](long long x) {
        long long v = 0, binom = 1;
        for (int j = 0; j <= d; ++j) {
          v += table[j][base] * binom;
          binom = binom * (x - base - j) / (j + 1);
        }
        return v;
      };
      int from = base;
      while (from > 0 && poly(from - 1) == lengths[from - 1]) --from;
      hs.stable_from = from;
      return hs;
    }
    std::vector<long long> next;
    for (int i = 0; i + 1 < n; ++i) next.push_back(diff[i + 1] - diff[i]);
    diff = std::move(next);
  }
  throw TruncationError("truncation insufficient: no stabilization window of length >= dim + 2 below N = " +
                            std::to_string(N) + ", try N = " + std::to_string(std::min(2 * N, kMaxExp)),
                        std::min(2 * N, kMaxExp));
}

HilbertSamuelData hilbert_samuel(const LocalRing& R, int N) {
  if (N < 2) throw std::invalid_argument("hilbert_samuel needs N >= 2");
  return fit_lengths(retruncate(R, N).hilbert_lengths(), R.nvars());
}

AdjoinResult adjoin_xy_minus_c(const LocalRing& A, const LocalRing::Elem& c, int N, const std::string& x,
                               const std::string& y) {
  if (!A.in_max_ideal(c)) throw std::invalid_argument("c must lie in the maximal ideal");
  const Field& k = A.field();
  std::vector<std::string> vars = A.vars();
  vars.push_back(x);
  vars.push_back(y);
  Poly rel = parse_poly(x + "*" + y, vars, k);
  rel = poly_add(k, rel, poly_scale(k, k.neg(1), A.to_poly(c)));
  AdjoinResult r;
  r.B = std::make_shared<const LocalRing>(A.adjoin_variables({x, y}, {rel}, N));
  r.hs_A = hilbert_samuel(A, N);
  r.hs_B = hilbert_samuel(*r.B, N);
  r.dim_ok = r.hs_B.dim == r.hs_A.dim + 1;
  return r;
}

FreeOverZReport free_over_z_check(const LocalRing& A, const LocalRing& B, const std::string& x, const std::string& y) {
  const Field& k = B.field();
  int ix = B.variable_index(x), iy = B.variable_index(y);
  if (ix < 0 || iy < 0) throw std::invalid_argument("B lacks the adjoined variables");
  for (const auto& v : A.vars())
    if (B.variable_index(v) < 0) throw std::invalid_argument("B lacks base variable " + v);
  int N = B.truncation();
  auto z = B.add(B.variable(ix), B.variable(iy));
  auto xv = B.variable(ix);

  struct Gen {
    Vec v;
    int deg;
    std::string label;
  };
  auto order = [&](const Vec& v) {
    for (int i = 0; i < B.dim(); ++i)
      if (v[i]) return B.basis_degree(i);
    return N;
  };
  // images of A in B, echelonized so that their lowest-degree forms are independent;
  // images past the truncation vanish and drop out of every degree count
  EchelonSpace adapted(k, B.dim());
  for (int a = 0; a < A.dim(); ++a) adapted.add(B.from_poly(A.to_poly(unit_vector(A.dim(), a))));
  FreeOverZReport r;
  std::vector<Gen> gens;
  for (int j = 0; j < adapted.dim(); ++j) {
    const Vec& base = adapted.rows()[j];
    int da = order(base);
    std::string lab = "[" + B.format(base) + "]";
    auto zi = B.one();
    for (int i = 0; da + i < N; ++i) {
      std::string l = lab + (i ? "*z^" + std::to_string(i) : "");
      gens.push_back({B.mul(base, zi), da + i, l});
      if (da + i + 1 < N) gens.push_back({B.mul(B.mul(base, zi), xv), da + i + 1, l + "*x"});
      zi = B.mul(zi, z);
    }
  }
  auto lengths = B.hilbert_lengths();
  for (int n = 0; n < N; ++n) {
    std::vector<int> cols;
    for (int i = 0; i < B.dim(); ++i)
      if (B.basis_degree(i) <= n) cols.push_back(i);
    std::vector<Vec> rows;
    std::vector<std::string> labels;
    for (const auto& g : gens)
      if (g.deg <= n) {
        Vec row(cols.size());
        for (size_t j = 0; j < cols.size(); ++j) row[j] = g.v[cols[j]];
        rows.push_back(row);
        labels.push_back(g.label);
      }
    int rk = rank(k, rows, static_cast<int>(cols.size()));
    if (rk != static_cast<int>(rows.size())) {
      r.failure_degree = n;
      std::vector<Vec> tr(cols.size(), Vec(rows.size()));
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) tr[j][i] = rows[i][j];
      auto dep = nullspace(k, tr, static_cast<int>(rows.size()));
      std::string rel;
      for (size_t i = 0; !dep.empty() && i < dep[0].size(); ++i)
        if (dep[0][i]) rel += (rel.empty() ? "" : " + ") + k.format(dep[0][i]) + "*" + labels[i];
      r.counterexample = "dependency in degree <= " + std::to_string(n) + ": " + rel;
      return r;
    }
    if (rk != lengths[n]) {
      r.failure_degree = n;
      r.counterexample = "span misses part of B/m^" + std::to_string(n + 1) + " (rank " + std::to_string(rk) +
                         " of " + std::to_string(lengths[n]) + ")";
      return r;
    }
    r.checked_degree = n;
  }
  r.pass = true;
  return r;
}

bool is_reduced_monomial(const LocalRing& R) {
  if (!R.is_monomial()) throw std::invalid_argument("reducedness is decided for monomial rings only");
  std::vector<Mono> gens;
  for (const auto& g : R.generators()) gens.push_back(g.terms.begin()->first);
  for (Mono g : gens) {
    bool minimal = true;
    for (Mono h : gens)
      if (h != g && mono_divides(h, g)) minimal = false;
    if (!minimal) continue;
    for (int i = 0; i < R.nvars(); ++i)
      if (mono_exp(g, i) > 1) return false;
  }
  return true;
}

MatrixRep push_forward(const MatrixRep& rho, const RingMap& f) {
  MatrixRep out{rho.G, f.target(), rho.dim, {}};
  for (const auto& M : rho.images) {
    RingMatrix N;
    for (const auto& e : M) N.push_back(f.apply(e));
    out.images.push_back(std::move(N));
  }
  return out;
}

MatrixRep specialize_zero(const MatrixRep& rho, const std::string& var) {
  const LocalRing& R = *rho.R;
  int i = R.variable_index(var);
  if (i < 0) throw std::invalid_argument("ring has no variable " + var);
  auto Q = std::make_shared<const LocalRing>(R.quotient({R.variable(i)}));
  return push_forward(rho, inclusion_by_name(rho.R, Q));
}

MatrixRep conjugate_diag(const MatrixRep& rho, const LocalRing::Elem& l) {
  const LocalRing& R = *rho.R;
  if (rho.dim != 2) throw std::invalid_argument("diagonal conjugation is for 2x2 representations");
  auto li = R.inverse(l);
  MatrixRep out = rho;
  for (auto& M : out.images) {
    M[1] = R.mul(l, M[1]);
    M[2] = R.mul(li, M[2]);
  }
  return out;
}

TriangularReport triangular_type(const GroupModel& m, const MatrixRep& rho, bool upper, const std::string& var) {
  const LocalRing& R = *rho.R;
  const Field& k = m.k;
  int n = m.G->order();
  int vi = R.variable_index(var);
  if (vi < 0) throw std::invalid_argument("ring has no variable " + var);
  TriangularReport r;
  r.triangular = r.diagonal_residual = true;
  Vec corner(n);
  for (int g = 0; g < n; ++g) {
    const auto& M = rho.images[g];
    if (!R.is_zero(M[upper ? 2 : 1])) r.triangular = false;
    if (R.residue(M[0]) != m.chi1[g] || R.residue(M[3]) != m.chi2[g]) r.diagonal_residual = false;
    corner[g] = R.coefficient(M[upper ? 1 : 2], mono_var(vi));
  }
  if (!r.triangular || !r.diagonal_residual) return r;
  Vec z(n);
  if (upper) {
    for (int g = 0; g < n; ++g) z[g] = k.div(corner[g], m.chi2[g]);
    r.nonsplit = !is_zero(corner) && !is_coboundary(m, twist(m, 2, 1), z);
  } else {
    for (int g = 0; g < n; ++g) z[g] = k.div(corner[g], m.chi1[g]);
    r.nonsplit = !is_zero(corner) && !is_coboundary(m, twist(m, 1, 2), z);
  }
  // the corner has to be a cocycle for the twisted action to define a class at all
  auto bad = kernels::first_failing_pair(n, n, [&](int g, int h) {
    int gh = m.G->mul(g, h);
    if (upper) return corner[gh] == k.add(k.mul(m.chi1[g], corner[h]), k.mul(corner[g], m.chi2[h]));
    return corner[gh] == k.add(k.mul(corner[g], m.chi1[h]), k.mul(m.chi2[g], corner[h]));
  });
  if (bad.found) r.nonsplit = false;
  return r;
}

VersalModel versal_matrix_model(const GroupModel& m, const DeterminantPair& det, int N) {
  const LocalRing& A = *det.A;
  auto ga = std::make_shared<const AssocAlgebra>(AssocAlgebra::group_algebra(det.G, det.A));
  auto ch = ch_quotient(ga, det);
  const AssocAlgebra& alg = ch.alg();
  GmaFrame f = gma_frame(alg, character_idempotent(alg, m.H, m.chi1), character_idempotent(alg, m.H, m.chi2),
                         ch.trace_fn());
  if (!f.relations_hold()) {
    std::string bad;
    for (const auto& [name, ok] : f.relations)
      if (!ok) bad += (bad.empty() ? "" : ", ") + name;
    throw FrameError("frame relations fail over the instance ring: " + bad);
  }
  VersalModel v;
  v.c = f.c;
  N = std::max(N, A.truncation() + 1);
  v.B = adjoin_xy_minus_c(A, f.c, N).B;
  const LocalRing& B = *v.B;
  RingMap inc = inclusion_by_name(det.A, v.B);
  auto xv = B.variable(B.variable_index("x")), yv = B.variable(B.variable_index("y"));
  int n = det.G->order();
  v.rho = MatrixRep{det.G, v.B, 2, {}};
  for (int g = 0; g < n; ++g) {
    auto a = frame_coordinates(alg, f, ch.image(g));
    v.rho.images.push_back({inc.apply(a[0]), B.mul(inc.apply(a[1]), yv), B.mul(inc.apply(a[2]), xv), inc.apply(a[3])});
  }
  auto w = multiplicativity_failure(v.rho);
  v.multiplicative = !w.found;
  if (w.found) v.failure = "not multiplicative at (" + det.G->name(w.a) + ", " + det.G->name(w.b) + ")";
  v.trace_det_ok = v.ch_identity = true;
  for (int g = 0; g < n && (v.trace_det_ok || v.ch_identity); ++g) {
    const auto& M = v.rho.images[g];
    auto t = inc.apply(det.t[g]), d = inc.apply(det.d[g]);
    if (rmat_trace(B, M, 2) != t || rmat_det2(B, M) != d) v.trace_det_ok = false;
    auto sq = rmat_mul(B, M, M, 2);
    for (int i = 0; i < 4; ++i) {
      auto e = B.sub(sq[i], B.mul(t, M[i]));
      if (i == 0 || i == 3) e = B.add(e, d);
      if (!B.is_zero(e)) v.ch_identity = false;
    }
  }
  if (!v.trace_det_ok && v.failure.empty()) v.failure = "(tr, det) differs from the given pair";
  if (!v.ch_identity && v.failure.empty()) v.failure = "Cayley-Hamilton identity fails entrywise";
  v.h_diagonal = true;
  for (int h : m.H) {
    const auto& M = v.rho.images[h];
    if (M[0] != B.scalar(m.chi1[h]) || M[3] != B.scalar(m.chi2[h]) || !B.is_zero(M[1]) || !B.is_zero(M[2]))
      v.h_diagonal = false;
  }
  if (!v.h_diagonal && v.failure.empty()) v.failure = "H does not map to diag(chi1, chi2)";
  return v;
}

std::vector<LocalRing::Elem> principal_units(const LocalRing& R) {
  const Field& k = R.field();
  int q = k.size(), d = R.dim();
  std::vector<LocalRing::Elem> out;
  std::vector<int> digits(d, 0);
  digits[0] = 1;
  while (true) {
    out.push_back(digits);
    int i = 1;
    while (i < d && digits[i] == q - 1) digits[i++] = 0;
    if (i >= d) break;
    ++digits[i];
  }
  return out;
}

LiftEquivalence lift_equivalence(const RingMap& phi1, const RingMap& phi2, const std::string& x, const std::string& y) {
  LiftEquivalence r;
  const LocalRing& S = *phi1.source();
  const LocalRing& T = *phi1.target();
  if (phi2.source() != phi1.source() && phi2.source()->vars() != S.vars())
    throw std::invalid_argument("maps have different sources");
  int ix = S.variable_index(x), iy = S.variable_index(y);
  if (ix < 0 || iy < 0) throw std::invalid_argument("source lacks the variables " + x + ", " + y);
  for (int i = 0; i < S.nvars(); ++i) {
    if (i == ix || i == iy) continue;
    if (phi1.images()[i] != phi2.images()[i]) {
      r.reason = "maps differ on base variable " + S.vars()[i];
      return r;
    }
  }
  const auto& x1 = phi1.images()[ix];
  const auto& x2 = phi2.images()[ix];
  const auto& y1 = phi1.images()[iy];
  const auto& y2 = phi2.images()[iy];
  for (const auto& l : principal_units(T)) {
    if (T.mul(l, x2) == x1 && T.mul(l, y1) == y2) {
      r.equivalent = true;
      r.lambda = l;
      return r;
    }
  }
  r.reason = "no l in 1 + m with phi1(x) = l phi2(x) and phi1(y) = l^-1 phi2(y)";
  return r;
}

}  // namespace vk
