#include "versalkit/cycles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vk {

namespace {

const Field& parse_field() {
  static const Field k = Field::prime(101);
  return k;
}

std::vector<Mono> minimalize(std::vector<Mono> gens) {
  std::sort(gens.begin(), gens.end(), [](Mono a, Mono b) {
    return mono_degree(a) != mono_degree(b) ? mono_degree(a) < mono_degree(b) : a < b;
  });
  std::vector<Mono> out;
  for (Mono g : gens) {
    bool redundant = false;
    for (Mono h : out)
      if (mono_divides(h, g)) redundant = true;
    if (!redundant) out.push_back(g);
  }
  return out;
}

Mono mono_lcm(Mono a, Mono b) {
  Mono r = 0;
  for (int i = 0; i < kMaxVars; ++i) r += mono_var(i, std::max(mono_exp(a, i), mono_exp(b, i)));
  return r;
}

bool in_ideal(const std::vector<Mono>& gens, Mono m) {
  for (Mono g : gens)
    if (mono_divides(g, m)) return true;
  return false;
}

}  // namespace

MonomialQuotient MonomialQuotient::parse(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  if (static_cast<int>(vars.size()) > kMaxVars) throw std::invalid_argument("too many variables");
  MonomialQuotient q;
  q.vars = vars;
  for (const auto& text : gens) {
    Poly p = parse_poly(text, vars, parse_field());
    if (!p.is_monomial()) throw std::invalid_argument("'" + text + "' is not a monomial");
    q.gens.push_back(p.terms.begin()->first);
  }
  q.gens = minimalize(q.gens);
  return q;
}

MonomialQuotient MonomialQuotient::from_ring(const LocalRing& R) {
  if (!R.is_monomial()) throw std::invalid_argument("ring is not a monomial quotient");
  MonomialQuotient q;
  q.vars = R.vars();
  for (const auto& g : R.generators()) q.gens.push_back(g.terms.begin()->first);
  q.gens = minimalize(q.gens);
  return q;
}

bool MonomialQuotient::is_unit_ideal() const { return std::find(gens.begin(), gens.end(), Mono{0}) != gens.end(); }

MonomialQuotient MonomialQuotient::with(const std::vector<Mono>& extra) const {
  MonomialQuotient q = *this;
  q.gens.insert(q.gens.end(), extra.begin(), extra.end());
  q.gens = minimalize(q.gens);
  return q;
}

MonomialQuotient MonomialQuotient::embedded(const std::vector<std::string>& ambient) const {
  std::vector<int> where;
  for (const auto& v : vars) {
    auto it = std::find(ambient.begin(), ambient.end(), v);
    if (it == ambient.end()) throw std::invalid_argument("ambient lacks variable " + v);
    where.push_back(static_cast<int>(it - ambient.begin()));
  }
  MonomialQuotient q;
  q.vars = ambient;
  for (Mono g : gens) {
    Mono m = 0;
    for (int i = 0; i < nvars(); ++i) m += mono_var(where[i], mono_exp(g, i));
    q.gens.push_back(m);
  }
  return q;
}

LocalRing MonomialQuotient::to_ring(const Field& k, int N) const {
  if (is_unit_ideal()) throw std::invalid_argument("unit ideal has no local ring");
  std::vector<Poly> polys;
  for (Mono g : gens) polys.push_back(poly_mono(g));
  return LocalRing::truncated(k, vars, polys, N);
}

std::string MonomialQuotient::format_ideal() const {
  std::string s = "(";
  for (size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + format_mono(gens[i], vars);
  return s + ")";
}

PrimeLabel PrimeLabel::of(const std::vector<std::string>& ambient, const std::vector<std::string>& names) {
  PrimeLabel p;
  p.ambient = ambient;
  for (const auto& n : names) {
    auto it = std::find(ambient.begin(), ambient.end(), n);
    if (it == ambient.end()) throw std::invalid_argument("prime variable " + n + " is not in the ambient");
    p.vars.push_back(static_cast<int>(it - ambient.begin()));
  }
  std::sort(p.vars.begin(), p.vars.end());
  p.vars.erase(std::unique(p.vars.begin(), p.vars.end()), p.vars.end());
  return p;
}

std::vector<std::string> PrimeLabel::names() const {
  std::vector<std::string> out;
  for (int i : vars) out.push_back(ambient[i]);
  return out;
}

std::string PrimeLabel::format() const {
  std::string s = "(";
  for (size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + ambient[vars[i]];
  return s + ")";
}

void Cycle::add(const PrimeLabel& p, long long mult) {
  if (p.ambient != ambient) throw std::invalid_argument("prime " + p.format() + " lives in another ambient");
  if (p.dim() != dim) throw std::invalid_argument("prime " + p.format() + " has the wrong dimension");
  long long& m = terms[p.vars];
  m += mult;
  if (m == 0) terms.erase(p.vars);
}

Cycle Cycle::operator+(const Cycle& o) const {
  if (ambient != o.ambient || dim != o.dim) throw std::invalid_argument("adding cycles of different shape");
  Cycle r = *this;
  for (const auto& [v, m] : o.terms) r.add(PrimeLabel{ambient, v}, m);
  return r;
}

std::vector<PrimeLabel> Cycle::support() const {
  std::vector<PrimeLabel> out;
  for (const auto& [v, m] : terms) out.push_back(PrimeLabel{ambient, v});
  return out;
}

std::string Cycle::format() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [v, m] : terms) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m);
    s += "[" + PrimeLabel{ambient, v}.format() + "]";
  }
  return s;
}

CycleDiff diff_cycles(const Cycle& lhs, const Cycle& rhs) {
  if (lhs.ambient != rhs.ambient) throw std::invalid_argument("comparing cycles over different ambients");
  CycleDiff d;
  std::set<std::vector<int>> keys;
  for (const auto& [v, m] : lhs.terms) keys.insert(v);
  for (const auto& [v, m] : rhs.terms) keys.insert(v);
  for (const auto& v : keys) {
    auto a = lhs.terms.count(v) ? lhs.terms.at(v) : 0;
    auto b = rhs.terms.count(v) ? rhs.terms.at(v) : 0;
    if (a != b) {
      d.equal = false;
      d.entries.emplace_back(PrimeLabel{lhs.ambient, v}.format(), a, b);
    }
  }
  if (lhs.dim != rhs.dim && !(lhs.is_zero() && rhs.is_zero())) d.equal = false;
  return d;
}

std::vector<PrimeLabel> minimal_primes(const MonomialQuotient& A) {
  std::vector<PrimeLabel> out;
  if (A.is_unit_ideal()) return out;
  int n = A.nvars();
  std::vector<unsigned> supports;
  for (Mono g : A.gens) {
    unsigned s = 0;
    for (int i = 0; i < n; ++i)
      if (mono_exp(g, i)) s |= 1u << i;
    supports.push_back(s);
  }
  std::vector<unsigned> subsets(1u << n);
  for (unsigned s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<unsigned> found;
  for (unsigned s : subsets) {
    bool hits = std::all_of(supports.begin(), supports.end(), [s](unsigned g) { return (g & s) != 0; });
    if (!hits) continue;
    bool minimal = std::none_of(found.begin(), found.end(), [s](unsigned f) { return (f & s) == f; });
    if (minimal) found.push_back(s);
  }
  for (unsigned s : found) {
    PrimeLabel p;
    p.ambient = A.vars;
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) p.vars.push_back(i);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long local_length(const MonomialQuotient& A, const PrimeLabel& P) {
  auto mins = minimal_primes(A);
  if (std::find(mins.begin(), mins.end(), P) == mins.end())
    throw std::invalid_argument("prime " + P.format() + " is not minimal over " + A.format_ideal() +
                                ": the localization has infinite length");
  std::vector<Mono> local;
  for (Mono g : A.gens) {
    Mono m = 0;
    for (int i : P.vars) m += mono_var(i, mono_exp(g, i));
    local.push_back(m);
  }
  local = minimalize(local);
  long long count = 0;
  std::set<Mono> seen{0};
  std::vector<Mono> frontier;
  if (!in_ideal(local, 0)) frontier.push_back(0);
  while (!frontier.empty()) {
    Mono m = frontier.back();
    frontier.pop_back();
    ++count;
    for (int i : P.vars) {
      Mono m2 = mono_mul(m, mono_var(i));
      if (in_ideal(local, m2) || !seen.insert(m2).second) continue;
      frontier.push_back(m2);
    }
  }
  return count;
}

Cycle cycle_of(const MonomialQuotient& A, int d) {
  Cycle c;
  c.ambient = A.vars;
  c.dim = d;
  for (const auto& P : minimal_primes(A))
    if (P.dim() == d) c.add(P, local_length(A, P));
  return c;
}

Cycle alpha(const Cycle& c1, const Cycle& c2, const std::string& x, const std::string& y) {
  if (c1.dim != c2.dim) throw std::invalid_argument("alpha needs cycles of equal dimension");
  if (c1.ambient != c2.ambient) throw std::invalid_argument("alpha needs cycles over one base");
  for (const auto& v : c1.ambient)
    if (v == x || v == y) throw std::invalid_argument("base already contains " + v);
  Cycle out;
  out.ambient = c1.ambient;
  out.ambient.push_back(x);
  out.ambient.push_back(y);
  out.dim = c1.dim + 1;
  int ix = static_cast<int>(c1.ambient.size()), iy = ix + 1;
  for (const auto& [v, m] : c1.terms) {
    PrimeLabel p{out.ambient, v};
    p.vars.push_back(ix);
    out.add(p, m);
  }
  for (const auto& [v, m] : c2.terms) {
    PrimeLabel p{out.ambient, v};
    p.vars.push_back(iy);
    out.add(p, m);
  }
  return out;
}

long long multiplicity_total(const Cycle& c) {
  long long e = 0;
  for (const auto& [v, m] : c.terms) e += m;
  return e;
}

MonomialQuotient intersect(const MonomialQuotient& a, const MonomialQuotient& b) {
  if (a.vars != b.vars) throw std::invalid_argument("intersecting ideals over different ambients");
  MonomialQuotient q;
  q.vars = a.vars;
  for (Mono g : a.gens)
    for (Mono h : b.gens) q.gens.push_back(mono_lcm(g, h));
  q.gens = minimalize(q.gens);
  return q;
}

AdditivityReport additivity_check(const MonomialQuotient& I1, const MonomialQuotient& I2,
                                  const std::optional<MonomialQuotient>& I3, int d) {
  AdditivityReport r;
  std::vector<Cycle> parts{cycle_of(I1, d), cycle_of(I2, d)};
  MonomialQuotient all = intersect(I1, I2);
  if (I3) {
    parts.push_back(cycle_of(*I3, d));
    all = intersect(all, *I3);
  }
  std::vector<const MonomialQuotient*> pieces{&I1, &I2};
  if (I3) pieces.push_back(&*I3);
  for (size_t i = 0; i < pieces.size(); ++i)
    for (const auto& P : minimal_primes(*pieces[i]))
      if (P.dim() > d) {
        r.hypothesis = false;
        r.violations.push_back("I" + std::to_string(i + 1) + " has the component " + P.format() + " of dimension " +
                               std::to_string(P.dim()));
      }
  // a d-dimensional prime in both supports exists iff V(Ii + Ij) has dimension >= d
  for (size_t i = 0; i < pieces.size(); ++i)
    for (size_t j = i + 1; j < pieces.size(); ++j)
      for (const auto& P : minimal_primes(pieces[i]->with(pieces[j]->gens)))
        if (P.dim() >= d) {
          r.hypothesis = false;
          r.violations.push_back(P.format() + " supports I" + std::to_string(i + 1) + " and I" + std::to_string(j + 1));
        }
  r.lhs = cycle_of(all, d);
  r.rhs = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) r.rhs = r.rhs + parts[i];
  r.additive = r.lhs == r.rhs;
  return r;
}

bool is_regular_variable(const MonomialQuotient& A, const std::string& v) {
  auto it = std::find(A.vars.begin(), A.vars.end(), v);
  if (it == A.vars.end()) throw std::invalid_argument("no variable " + v);
  int i = static_cast<int>(it - A.vars.begin());
  for (Mono g : A.gens) {
    Mono colon = mono_exp(g, i) ? g - mono_var(i) : g;
    if (!in_ideal(A.gens, colon)) return false;
  }
  return true;
}

Cycle cut_by_regular(const MonomialQuotient& A, const std::string& v, int d) {
  if (!is_regular_variable(A, v)) throw std::invalid_argument(v + " is a zerodivisor on k[vars]/" + A.format_ideal());
  int i = static_cast<int>(std::find(A.vars.begin(), A.vars.end(), v) - A.vars.begin());
  return cycle_of(A.with({mono_var(i)}), d - 1);
}

namespace {

long long top_multiplicity(const MonomialQuotient& A, int dim) {
  if (A.is_unit_ideal()) return 0;
  auto hs = hilbert_samuel(A.to_ring(Field::prime(2), kDefaultTruncation), kDefaultTruncation);
  return hs.dim == dim ? hs.mult : 0;
}

}  // namespace

BmReport bm_cycle_identity(const BmScenario& s) {
  BmReport r;
  std::vector<std::string> ver = s.base;
  for (const auto& v : {s.x, s.y}) {
    if (std::find(ver.begin(), ver.end(), v) != ver.end())
      throw std::invalid_argument("base variables already contain " + v);
    ver.push_back(v);
  }
  auto locus = [&](const std::optional<std::vector<std::string>>& gens) {
    return gens ? MonomialQuotient::parse(ver, *gens) : MonomialQuotient::parse(ver, {"1"});
  };
  MonomialQuotient L1 = locus(s.locus1), L2 = locus(s.locus2), Li = locus(s.locus_irr);
  Mono mx = mono_var(static_cast<int>(s.base.size())), my = mono_var(static_cast<int>(s.base.size()) + 1);
  if (!in_ideal(L1.gens, mx)) r.shape_errors.push_back("type-1 locus " + L1.format_ideal() + " does not contain " + s.x);
  if (!in_ideal(L2.gens, my)) r.shape_errors.push_back("type-2 locus " + L2.format_ideal() + " does not contain " + s.y);
  if (s.d < 2) r.shape_errors.push_back("d must be at least 2");
  r.shape_ok = r.shape_errors.empty();
  if (!r.shape_ok) return r;

  MonomialQuotient rel = MonomialQuotient::parse(ver, s.relations);
  MonomialQuotient Iver = intersect(intersect(L1, L2), Li).with(rel.gens);
  MonomialQuotient R1 = MonomialQuotient::parse(s.base, s.r1), R2 = MonomialQuotient::parse(s.base, s.r2);
  r.lhs = cycle_of(Iver, s.d - 1);
  r.rhs = alpha(cycle_of(R1, s.d - 2), cycle_of(R2, s.d - 2), s.x, s.y);
  r.diff = diff_cycles(r.lhs, r.rhs);
  r.e_lhs = top_multiplicity(Iver, s.d - 1);
  r.e_rhs = top_multiplicity(R1, s.d - 2) + top_multiplicity(R2, s.d - 2);
  return r;
}

long long local_length_general(const LocalRing& R, const std::vector<std::string>& prime, int N) {
  const Field& k = R.field();
  std::vector<int> keep(R.nvars(), -1);
  std::vector<std::string> pv;
  for (const auto& v : prime) {
    int i = R.variable_index(v);
    if (i < 0) throw std::invalid_argument("no variable " + v);
    keep[i] = static_cast<int>(pv.size());
    pv.push_back(v);
  }
  std::vector<Poly> local;
  for (const auto& g : R.generators()) {
    Poly h;
    for (const auto& [m, c] : g.terms) {
      Mono t = 0;
      for (int i = 0; i < R.nvars(); ++i)
        if (keep[i] >= 0) t += mono_var(keep[i], mono_exp(m, i));
      h = poly_add(k, h, poly_mono(t, c));
    }
    if (h.terms.count(0)) return 0;  // a unit at the prime: the localization vanishes
    if (!h.is_zero()) local.push_back(h);
  }
  auto hs = hilbert_samuel(LocalRing::truncated(k, pv, local, N), N);
  if (hs.dim != 0) throw std::invalid_argument("prime is not minimal: the localization has dimension " +
                                               std::to_string(hs.dim));
  return hs.mult;
}

ControlCycleReport control_cycle_check(const LocalRing& A, const std::vector<std::string>& p, const LocalRing::Elem& c,
                                       int N) {
  ControlCycleReport r;
  std::vector<Poly> pv;
  for (const auto& v : p) {
    int i = A.variable_index(v);
    if (i < 0) throw std::invalid_argument("no variable " + v);
    pv.push_back(poly_mono(mono_var(i)));
  }
  auto hsA = hilbert_samuel(A, N);
  LocalRing Ap = retruncate(A, N).with_generators(pv);
  auto hsAp = hilbert_samuel(Ap, N);
  r.dim_A = hsA.dim;
  r.e_Ap = hsAp.mult;
  r.hypothesis = hsAp.dim == hsA.dim;
  r.c_in_p = Ap.is_zero(Ap.from_poly(A.to_poly(c)));
  if (!r.hypothesis) return r;
  auto adj = adjoin_xy_minus_c(A, c, N);
  const LocalRing& B = *adj.B;
  std::vector<Poly> qv = pv;
  std::vector<std::string> q = p;
  qv.push_back(poly_mono(mono_var(B.variable_index("x"))));
  q.push_back("x");
  auto hsBq = hilbert_samuel(B.with_generators(qv), N);
  r.dim_Bq = hsBq.dim;
  r.e_Bq = hsBq.mult;
  r.len_Ap = local_length_general(A, p, N);
  r.len_Bq = local_length_general(B, q, N);
  return r;
}

}  // namespace vk
