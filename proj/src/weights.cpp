#include "versalkit/weights.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <regex>

namespace vk {

using Rational = boost::multiprecision::cpp_rational;

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
  // X^n - 1 divided by Phi_d for every proper divisor d, coefficients low degree first
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto den = cyclotomic_polynomial(d);
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long long c = num[i];  // den is monic
      q[i - dd] = c;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = q;
  }
  return num;
}

Cyclotomic::Cyclotomic(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
  int d = degree();
  Elem cur = integer(1);
  for (int e = 0; e < n; ++e) {
    powers_.push_back(cur);
    // multiply by X and reduce with X^d = -sum phi_i X^i
    Elem next(d, 0);
    for (int i = 0; i + 1 < d; ++i) next[i + 1] = cur[i];
    long long top = cur[d - 1];
    for (int i = 0; i < d; ++i) next[i] -= top * phi_[i];
    cur = next;
  }
}

Cyclotomic::Elem Cyclotomic::integer(long long c) const {
  Elem e = zero();
  e[0] = c;
  return e;
}

Cyclotomic::Elem Cyclotomic::root(long long e) const { return powers_[mod(e, n_)]; }

Cyclotomic::Elem Cyclotomic::add(const Elem& a, const Elem& b) const {
  Elem r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Cyclotomic::Elem Cyclotomic::sub(const Elem& a, const Elem& b) const {
  Elem r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Cyclotomic::Elem Cyclotomic::scale(long long c, const Elem& a) const {
  Elem r(a);
  for (auto& v : r) v *= c;
  return r;
}

Cyclotomic::Elem Cyclotomic::mul(const Elem& a, const Elem& b) const {
  Elem r = zero();
  for (int i = 0; i < degree(); ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < degree(); ++j)
      if (b[j]) r = add(r, scale(a[i] * b[j], root(i + j)));
  }
  return r;
}

std::optional<long long> Cyclotomic::as_integer(const Elem& a) const {
  for (int i = 1; i < degree(); ++i)
    if (a[i]) return std::nullopt;
  return a[0];
}

bool Cyclotomic::in_subring(const Elem& a, int step) const {
  // the subring Z[X^step] is spanned by the reduced powers X^(step k)
  std::vector<Elem> gens;
  for (int e = 0; e < n_; e += step) gens.push_back(powers_[e]);
  int d = degree();
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) rows.emplace_back(g.begin(), g.end());
  std::vector<Rational> target(a.begin(), a.end());
  // eliminate: is target in the Q-span of gens (integrality follows from the basis being integral)
  std::vector<std::vector<Rational>> basis;
  std::vector<int> piv;
  auto reduce = [&](std::vector<Rational> v) {
    for (size_t b = 0; b < basis.size(); ++b)
      if (v[piv[b]] != 0) {
        Rational c = v[piv[b]];
        for (int i = 0; i < d; ++i) v[i] -= c * basis[b][i];
      }
    return v;
  };
  for (auto& r : rows) {
    auto v = reduce(r);
    int p = -1;
    for (int i = 0; i < d && p < 0; ++i)
      if (v[i] != 0) p = i;
    if (p < 0) continue;
    Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (auto& b : basis)
      if (b[p] != 0) {
        Rational c = b[p];
        for (int i = 0; i < d; ++i) b[i] -= c * v[i];
      }
    basis.push_back(v);
    piv.push_back(p);
  }
  auto rest = reduce(target);
  return std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return x == 0; });
}

std::string Cyclotomic::format(const Elem& a) const {
  std::string s;
  for (int i = 0; i < degree(); ++i) {
    if (!a[i]) continue;
    std::string term = i == 0 ? std::to_string(std::llabs(a[i]))
                              : (std::llabs(a[i]) == 1 ? "" : std::to_string(std::llabs(a[i])) + "*") + "X" +
                                    (i > 1 ? "^" + std::to_string(i) : "");
    if (s.empty())
      s = (a[i] < 0 ? "-" : "") + term;
    else
      s += (a[i] < 0 ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

std::vector<RegularClass> pregular_classes(int p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  int n = p * p - 1;
  std::vector<RegularClass> out;
  for (int u = 0; u < p - 1; ++u) {
    int e = (p + 1) * u;
    out.push_back({ClassKind::Central, e, e, "central(" + std::to_string(u) + ")"});
  }
  for (int u = 0; u < p - 1; ++u)
    for (int v = u + 1; v < p - 1; ++v)
      out.push_back({ClassKind::Split, (p + 1) * u, (p + 1) * v,
                     "split(" + std::to_string(u) + "," + std::to_string(v) + ")"});
  for (int i = 1; i < n; ++i) {
    if (i % (p + 1) == 0) continue;
    int j = static_cast<int>(mod(static_cast<long long>(i) * p, n));
    if (j < i) continue;
    out.push_back({ClassKind::Nonsplit, i, j, "nonsplit(" + std::to_string(i) + ")"});
  }
  return out;
}

BrauerTable::BrauerTable(int p) : p_(p), ring_(p * p - 1), classes_(pregular_classes(p)) {}

int BrauerTable::central_generator() const { return p_ == 2 ? 0 : 1; }

BrauerCharacter BrauerTable::sym(int m, int a) const {
  if (m < 0) throw std::invalid_argument("symmetric power needs m >= 0");
  BrauerCharacter f{p_, {}};
  for (const auto& c : classes_) {
    auto v = ring_.zero();
    for (int u = 0; u <= m; ++u)
      v = ring_.add(v, ring_.root(static_cast<long long>(c.i) * u + static_cast<long long>(c.j) * (m - u) +
                                  static_cast<long long>(c.i + c.j) * a));
    f.values.push_back(v);
  }
  return f;
}

BrauerCharacter BrauerTable::det_power(int a) const { return sym(0, a); }

BrauerCharacter BrauerTable::steinberg() const {
  BrauerCharacter f{p_, {}};
  for (const auto& c : classes_) {
    long long v = c.kind == ClassKind::Central ? p_ : (c.kind == ClassKind::Split ? 1 : -1);
    f.values.push_back(ring_.integer(v));
  }
  return f;
}

BrauerCharacter BrauerTable::principal_series(int k1, int k2) const {
  BrauerCharacter f{p_, {}};
  for (const auto& c : classes_) {
    switch (c.kind) {
      case ClassKind::Central:
        f.values.push_back(ring_.scale(p_ + 1, ring_.root(static_cast<long long>(c.i) * (k1 + k2))));
        break;
      case ClassKind::Split:
        f.values.push_back(ring_.add(ring_.root(static_cast<long long>(c.i) * k1 + static_cast<long long>(c.j) * k2),
                                     ring_.root(static_cast<long long>(c.j) * k1 + static_cast<long long>(c.i) * k2)));
        break;
      case ClassKind::Nonsplit:
        f.values.push_back(ring_.zero());
        break;
    }
  }
  return f;
}

BrauerCharacter BrauerTable::product(const BrauerCharacter& a, const BrauerCharacter& b) const {
  BrauerCharacter f{p_, {}};
  for (size_t i = 0; i < classes_.size(); ++i) f.values.push_back(ring_.mul(a.values[i], b.values[i]));
  return f;
}

BrauerCharacter BrauerTable::sum(const BrauerCharacter& a, const BrauerCharacter& b) const {
  BrauerCharacter f{p_, {}};
  for (size_t i = 0; i < classes_.size(); ++i) f.values.push_back(ring_.add(a.values[i], b.values[i]));
  return f;
}

std::optional<long long> BrauerTable::dimension(const BrauerCharacter& f) const {
  return ring_.as_integer(f.values[identity()]);
}

std::optional<int> BrauerTable::central_exponent(const BrauerCharacter& f) const {
  auto dim = dimension(f);
  if (!dim) return std::nullopt;
  const auto& z = f.values[central_generator()];
  for (int e = 0; e < std::max(1, p_ - 1); ++e)
    if (z == ring_.scale(*dim, ring_.root(static_cast<long long>(p_ + 1) * e))) return e;
  return std::nullopt;
}

InertialType InertialType::parse(const std::string& text) {
  static const std::regex trivial(R"(\s*(trivial|TrivialSplit)\s*)");
  static const std::regex st(R"(\s*(steinberg|ScalarSteinberg)\s*[:(]\s*(-?\d+)\s*\)?\s*)");
  static const std::regex ps(R"(\s*(principal|TamePrincipal)\s*[:(]\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
  std::smatch m;
  InertialType t;
  if (std::regex_match(text, m, trivial)) return t;
  if (std::regex_match(text, m, st)) {
    t.kind = ScalarSteinberg;
    t.k1 = std::stoi(m[2]);
    return t;
  }
  if (std::regex_match(text, m, ps)) {
    t.kind = TamePrincipal;
    t.k1 = std::stoi(m[2]);
    t.k2 = std::stoi(m[3]);
    return t;
  }
  if (text.find("cusp") != std::string::npos) throw std::invalid_argument("cuspidal inertial types are not supported");
  throw std::invalid_argument("unknown inertial type '" + text + "'");
}

std::string InertialType::format() const {
  switch (kind) {
    case TrivialSplit:
      return "TrivialSplit";
    case ScalarSteinberg:
      return "ScalarSteinberg(" + std::to_string(k1) + ")";
    case TamePrincipal:
      return "TamePrincipal(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
  }
  return "";
}

BrauerCharacter brauer_char_sym(const BrauerTable& t, int m, int a) { return t.sym(m, a); }

BrauerCharacter brauer_char_type(const BrauerTable& t, const InertialType& tau) {
  switch (tau.kind) {
    case InertialType::TrivialSplit:
      return t.det_power(0);
    case InertialType::ScalarSteinberg:
      return t.product(t.steinberg(), t.det_power(tau.k1));
    case InertialType::TamePrincipal:
      return t.principal_series(tau.k1, tau.k2);
  }
  throw std::logic_error("unhandled inertial type");
}

BrauerCharacter brauer_char_type_cr(const BrauerTable& t, const InertialType& tau) {
  if (tau.kind == InertialType::ScalarSteinberg) return t.det_power(tau.k1);
  return brauer_char_type(t, tau);
}

long long dimension_sum(const MultiplicityTable& m) {
  long long s = 0;
  for (const auto& [w, c] : m) s += (w.r + 1) * c;
  return s;
}

Decomposition decompose(const BrauerTable& t, const BrauerCharacter& f) {
  const Cyclotomic& R = t.ring();
  int p = t.p();
  int q = std::max(1, p - 1);
  Decomposition out;
  std::vector<SerreWeight> unknowns;
  auto ce = t.central_exponent(f);
  for (int r = 0; r <= p - 1; ++r)
    for (int s = 0; s < q; ++s)
      if (!ce || mod(r + 2 * s - *ce, q) == 0) unknowns.push_back({r, s});
  if (ce) {
    out.central_filtered = true;
    out.central_exponent = *ce;
  }
  std::vector<BrauerCharacter> basis;
  for (const auto& w : unknowns) basis.push_back(t.sym(w.r, w.s));

  int nu = static_cast<int>(unknowns.size());
  int d = R.degree();
  std::vector<std::vector<Rational>> rows;
  for (size_t c = 0; c < t.classes().size(); ++c)
    for (int i = 0; i < d; ++i) {
      std::vector<Rational> row(nu + 1);
      for (int u = 0; u < nu; ++u) row[u] = basis[u].values[c][i];
      row[nu] = f.values[c][i];
      rows.push_back(row);
    }
  std::vector<int> pivots;
  int rk = 0;
  for (int col = 0; col < nu && rk < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    for (int r = rk; r < static_cast<int>(rows.size()) && sel < 0; ++r)
      if (rows[r][col] != 0) sel = r;
    if (sel < 0) continue;
    std::swap(rows[rk], rows[sel]);
    Rational inv = 1 / rows[rk][col];
    for (auto& x : rows[rk]) x *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rk && rows[r][col] != 0) {
        Rational c = rows[r][col];
        for (int j = col; j <= nu; ++j) rows[r][j] -= c * rows[rk][j];
      }
    pivots.push_back(col);
    ++rk;
  }
  for (int r = rk; r < static_cast<int>(rows.size()); ++r)
    if (rows[r][nu] != 0)
      throw NotBrauerCharacter("not a Brauer character: no combination of the weights matches (residual " +
                               rows[r][nu].str() + " at class " + t.classes()[r / d].label + ")");
  if (rk < nu) throw std::logic_error("weight characters are linearly dependent");
  for (int i = 0; i < rk; ++i) {
    const Rational& v = rows[i][nu];
    const auto& w = unknowns[pivots[i]];
    if (denominator(v) != 1 || v < 0)
      throw NotBrauerCharacter("not a Brauer character: m" + w.format() + " = " + v.str());
    long long c = static_cast<long long>(numerator(v));
    if (c) out.m[w] = c;
  }
  // the solution has to reproduce f exactly
  BrauerCharacter acc{p, std::vector<Cyclotomic::Elem>(t.classes().size(), R.zero())};
  for (const auto& [w, c] : out.m) {
    auto s = t.sym(w.r, w.s);
    for (size_t i = 0; i < acc.values.size(); ++i) acc.values[i] = R.add(acc.values[i], R.scale(c, s.values[i]));
  }
  if (acc != f) throw NotBrauerCharacter("not a Brauer character: the solution does not reproduce f");
  return out;
}

HodgeType weight_of_sigma(const SerreWeight& w) { return HodgeType{w.s, w.s + w.r + 1, InertialType{}}; }

BrauerCharacter sigma_character(const BrauerTable& t, const HodgeType& w, bool crystalline) {
  if (w.a >= w.b) throw std::invalid_argument("Hodge type needs a < b");
  BrauerCharacter type;
  if (crystalline)
    type = brauer_char_type_cr(t, w.tau);
  else if (w.tau.kind == InertialType::TrivialSplit)
    type = t.steinberg();
  else
    type = brauer_char_type(t, w.tau);
  return t.product(type, t.sym(w.b - w.a - 1, w.a));
}

LedgerReport ledger(const BrauerTable& t, const HodgeType& w, bool crystalline,
                    const std::map<SerreWeight, Cycle>& C1, const std::map<SerreWeight, Cycle>& C2,
                    const std::optional<Cycle>& claimed) {
  LedgerReport r;
  r.m = decompose(t, sigma_character(t, w, crystalline)).m;
  std::optional<Cycle> shape;
  for (const auto* C : {&C1, &C2})
    for (const auto& [s, c] : *C) {
      if (shape && (shape->ambient != c.ambient || shape->dim != c.dim))
        throw std::invalid_argument("cycle for weight " + s.format() + " has a different dimension or ambient");
      if (!shape) shape = Cycle{c.ambient, c.dim, {}};
    }
  if (!shape) {
    if (claimed) r.diff = diff_cycles(Cycle{claimed->ambient, claimed->dim, {}}, *claimed);
    return r;
  }
  r.rhs = alpha(*shape, *shape);
  for (const auto& [s, mult] : r.m) {
    auto c1 = C1.find(s), c2 = C2.find(s);
    if (c1 == C1.end() || c2 == C2.end()) throw std::invalid_argument("missing cycle entries for weight " + s.format());
    Cycle a = alpha(c1->second, c2->second);
    for (int i = 0; i < mult; ++i) r.rhs = r.rhs + a;
    r.e_total += mult * (multiplicity_total(c1->second) + multiplicity_total(c2->second));
  }
  if (claimed) r.diff = diff_cycles(r.rhs, *claimed);
  return r;
}

}  // namespace vk
