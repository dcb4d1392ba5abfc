#include "versalkit/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace vk {

namespace {

std::string power_name(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

std::string join_names(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + "*" + b;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<int> table, std::vector<std::string> names) {
  long long sq = static_cast<long long>(table.size());
  int n = 0;
  while (static_cast<long long>(n) * n < sq) ++n;
  if (n == 0 || static_cast<long long>(n) * n != sq) throw std::invalid_argument("group table is not square");
  for (int v : table)
    if (v < 0 || v >= n) throw std::invalid_argument("group table is not closed");
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  if (static_cast<int>(names.size()) != n) throw std::invalid_argument("wrong number of element names");
  g.names_ = std::move(names);
  g.finish();
  auto w = kernels::associativity_failure(g.table_, n);
  if (w.found)
    throw std::invalid_argument("associativity fails at (" + g.names_[w.a] + ", " + g.names_[w.b] + ", " +
                                g.names_[w.c] + ")");
  return g;
}

void FiniteGroup::finish() {
  id_ = -1;
  for (int e = 0; e < n_ && id_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) id_ = e;
  }
  if (id_ < 0) throw std::invalid_argument("group table has no identity");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == id_ && mul(b, a) == id_) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw std::invalid_argument("element " + names_[a] + " has no inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(int n, const std::string& gen) { return abelian({n}, {gen}); }

int abelian_index(const std::vector<int>& orders, const std::vector<int>& exps) {
  int idx = 0;
  for (size_t i = 0; i < orders.size(); ++i) {
    int e = exps[i] % orders[i];
    if (e < 0) e += orders[i];
    idx = idx * orders[i] + e;
  }
  return idx;
}

namespace {

std::vector<int> abelian_exps(const std::vector<int>& orders, int idx) {
  std::vector<int> e(orders.size());
  for (size_t i = orders.size(); i-- > 0;) {
    e[i] = idx % orders[i];
    idx /= orders[i];
  }
  return e;
}

}  // namespace

FiniteGroup FiniteGroup::abelian(const std::vector<int>& orders, const std::vector<std::string>& gens) {
  if (orders.size() != gens.size()) throw std::invalid_argument("orders and generator names differ in length");
  int n = 1;
  for (int o : orders) {
    if (o < 1) throw std::invalid_argument("cyclic factor of order < 1");
    n *= o;
  }
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(static_cast<size_t>(n) * n);
  g.names_.resize(n);
  for (int a = 0; a < n; ++a) {
    auto ea = abelian_exps(orders, a);
    std::string nm = "1";
    for (size_t i = 0; i < orders.size(); ++i)
      if (ea[i] != 0) nm = join_names(nm, power_name(gens[i], ea[i]));
    g.names_[a] = nm;
    for (int b = 0; b < n; ++b) {
      auto eb = abelian_exps(orders, b);
      for (size_t i = 0; i < orders.size(); ++i) eb[i] += ea[i];
      g.table_[static_cast<size_t>(a) * n + b] = abelian_index(orders, eb);
    }
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::heisenberg(int p, const std::vector<std::string>& gens) {
  if (p < 2) throw std::invalid_argument("heisenberg group needs p >= 2");
  if (gens.size() != 3) throw std::invalid_argument("heisenberg group needs three generator names");
  int n = p * p * p;
  auto idx = [p](int i, int j, int l) { return ((i % p) * p + j % p) * p + l % p; };
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(static_cast<size_t>(n) * n);
  g.names_.resize(n);
  for (int a = 0; a < n; ++a) {
    int i = a / (p * p), j = a / p % p, l = a % p;
    std::string nm = "1";
    if (i) nm = join_names(nm, power_name(gens[0], i));
    if (j) nm = join_names(nm, power_name(gens[1], j));
    if (l) nm = join_names(nm, power_name(gens[2], l));
    g.names_[a] = nm;
    for (int b = 0; b < n; ++b) {
      int i2 = b / (p * p), j2 = b / p % p, l2 = b % p;
      g.table_[static_cast<size_t>(a) * n + b] = idx(i + i2, j + j2, l + l2 + i * j2);
    }
  }
  g.finish();
  return g;
}

std::vector<int> heisenberg_automorphism(int p, int alpha, int beta) {
  alpha = ((alpha % p) + p) % p;
  beta = ((beta % p) + p) % p;
  if (alpha == 0 || beta == 0) throw std::invalid_argument("heisenberg automorphism needs units");
  int n = p * p * p;
  std::vector<int> f(n);
  for (int a = 0; a < n; ++a) {
    int i = a / (p * p), j = a / p % p, l = a % p;
    f[a] = ((i * alpha % p) * p + j * beta % p) * p + l * alpha % p * beta % p;
  }
  return f;
}

int FiniteGroup::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = id_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(int a) const {
  int o = 1;
  for (int x = a; x != id_; x = mul(x, a)) ++o;
  return o;
}

int FiniteGroup::find(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& gens) const {
  std::vector<char> in(n_, 0);
  std::vector<int> out{id_};
  in[id_] = 1;
  for (size_t i = 0; i < out.size(); ++i)
    for (int s : gens) {
      int y = mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteGroup::generators() const {
  std::vector<int> gens;
  std::vector<int> cur{id_};
  for (int a = 0; a < n_ && static_cast<int>(cur.size()) < n_; ++a) {
    if (std::binary_search(cur.begin(), cur.end(), a)) continue;
    gens.push_back(a);
    cur = closure(gens);
  }
  return gens;
}

std::vector<int> FiniteGroup::conjugacy_classes(int* count) const {
  std::vector<int> cls(n_, -1);
  int c = 0;
  for (int x = 0; x < n_; ++x) {
    if (cls[x] >= 0) continue;
    for (int g = 0; g < n_; ++g) cls[conj(g, x)] = c;
    ++c;
  }
  if (count) *count = c;
  return cls;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& s) const {
  if (s.empty()) return false;
  std::vector<char> in(n_, 0);
  for (int x : s) in[x] = 1;
  if (!in[id_]) return false;
  for (int a : s)
    for (int b : s)
      if (!in[mul(a, inv(b))]) return false;
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& s) const {
  if (!is_subgroup(s)) return false;
  std::vector<char> in(n_, 0);
  for (int x : s) in[x] = 1;
  for (int g = 0; g < n_; ++g)
    for (int x : s)
      if (!in[conj(g, x)]) return false;
  return true;
}

FiniteGroup FiniteGroup::permuted(const std::vector<int>& perm) const {
  std::vector<int> pos(n_);
  for (int i = 0; i < n_; ++i) pos[perm[i]] = i;
  FiniteGroup g;
  g.n_ = n_;
  g.table_.resize(table_.size());
  g.names_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    g.names_[i] = names_[perm[i]];
    for (int j = 0; j < n_; ++j) g.table_[static_cast<size_t>(i) * n_ + j] = pos[mul(perm[i], perm[j])];
  }
  g.finish();
  return g;
}

namespace {

void require_automorphism(const FiniteGroup& P, const std::vector<int>& f, const std::string& what) {
  int n = P.order();
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument(what + " has the wrong size");
  std::vector<char> hit(n, 0);
  for (int x : f) {
    if (x < 0 || x >= n || hit[x]) throw std::invalid_argument(what + " is not a bijection");
    hit[x] = 1;
  }
  auto w = kernels::first_failing_pair(n, n, [&](int a, int b) { return f[P.mul(a, b)] == P.mul(f[a], f[b]); });
  if (w.found)
    throw std::invalid_argument(what + " is not multiplicative at (" + P.name(w.a) + ", " + P.name(w.b) + ")");
}

}  // namespace

std::vector<int> abelian_automorphism(const std::vector<int>& orders, const std::vector<std::vector<int>>& images) {
  if (images.size() != orders.size()) throw std::invalid_argument("one image per generator of P is required");
  int n = 1;
  for (int o : orders) n *= o;
  std::vector<int> f(n);
  for (int a = 0; a < n; ++a) {
    auto e = abelian_exps(orders, a);
    std::vector<long long> img(orders.size(), 0);
    for (size_t i = 0; i < orders.size(); ++i) {
      if (images[i].size() != orders.size()) throw std::invalid_argument("image exponent vector has the wrong length");
      for (size_t j = 0; j < orders.size(); ++j) img[j] += static_cast<long long>(e[i]) * images[i][j];
    }
    std::vector<int> r(orders.size());
    for (size_t j = 0; j < orders.size(); ++j) r[j] = static_cast<int>(((img[j] % orders[j]) + orders[j]) % orders[j]);
    f[a] = abelian_index(orders, r);
  }
  std::vector<std::string> names(orders.size(), "x");
  require_automorphism(FiniteGroup::abelian(orders, names), f, "action");
  return f;
}

std::vector<std::vector<int>> action_from_generators(const FiniteGroup& P, const FiniteGroup& H,
                                                     const std::vector<int>& hgens,
                                                     const std::vector<std::vector<int>>& perms) {
  if (hgens.size() != perms.size()) throw std::invalid_argument("one automorphism per generator of H is required");
  for (size_t i = 0; i < perms.size(); ++i) require_automorphism(P, perms[i], "action of " + H.name(hgens[i]));
  std::vector<std::vector<int>> act(H.order());
  std::vector<int> idp(P.order());
  std::iota(idp.begin(), idp.end(), 0);
  act[H.identity()] = idp;
  std::deque<int> todo{H.identity()};
  while (!todo.empty()) {
    int h = todo.front();
    todo.pop_front();
    for (size_t i = 0; i < hgens.size(); ++i) {
      int hs = H.mul(h, hgens[i]);
      std::vector<int> f(P.order());
      for (int x = 0; x < P.order(); ++x) f[x] = act[h][perms[i][x]];
      if (act[hs].empty()) {
        act[hs] = f;
        todo.push_back(hs);
      } else if (act[hs] != f) {
        throw std::invalid_argument("action is not a homomorphism (conflict at " + H.name(hs) + ")");
      }
    }
  }
  for (const auto& f : act)
    if (f.empty()) throw std::invalid_argument("generators of H do not generate H");
  return act;
}

Semidirect build_semidirect(const FiniteGroup& P, const FiniteGroup& H, const std::vector<std::vector<int>>& action) {
  int np = P.order(), nh = H.order(), n = np * nh;
  if (static_cast<int>(action.size()) != nh) throw std::invalid_argument("action must list one automorphism per element of H");
  for (int h = 0; h < nh; ++h) require_automorphism(P, action[h], "action of " + H.name(h));
  auto w = kernels::first_failing_pair(nh, nh, [&](int a, int b) {
    const auto& ab = action[H.mul(a, b)];
    for (int x = 0; x < np; ++x)
      if (ab[x] != action[a][action[b][x]]) return false;
    return true;
  });
  if (w.found)
    throw std::invalid_argument("action is not a homomorphism at (" + H.name(w.a) + ", " + H.name(w.b) + ")");

  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int p1 = 0; p1 < np; ++p1)
    for (int h1 = 0; h1 < nh; ++h1) {
      int a = p1 * nh + h1;
      names[a] = join_names(P.name(p1), H.name(h1));
      for (int p2 = 0; p2 < np; ++p2)
        for (int h2 = 0; h2 < nh; ++h2)
          table[static_cast<size_t>(a) * n + p2 * nh + h2] = P.mul(p1, action[h1][p2]) * nh + H.mul(h1, h2);
    }
  Semidirect sd{FiniteGroup::from_table(std::move(table), std::move(names)), {}, {}, {}, {}};
  for (int p = 0; p < np; ++p) sd.P.push_back(p * nh + H.identity());
  for (int h = 0; h < nh; ++h) sd.H.push_back(P.identity() * nh + h);
  for (int g = 0; g < n; ++g) {
    sd.p_part.push_back(g / nh);
    sd.h_part.push_back(g % nh);
  }
  return sd;
}

GroupModel make_model(std::string name, int p, const Field& k, const Semidirect& sd, const std::vector<int>& chi1_on_H,
                      const std::vector<int>& chi2_on_H) {
  if (chi1_on_H.size() != sd.H.size() || chi2_on_H.size() != sd.H.size())
    throw std::invalid_argument("characters must be given on every element of H");
  GroupModel m;
  m.name = std::move(name);
  m.p = p;
  m.k = k;
  m.G = std::make_shared<const FiniteGroup>(sd.G);
  m.P = sd.P;
  m.H = sd.H;
  int n = sd.G.order();
  m.h_part.resize(n);
  m.chi1.resize(n);
  m.chi2.resize(n);
  for (int g = 0; g < n; ++g) {
    m.h_part[g] = sd.H[sd.h_part[g]];
    m.chi1[g] = chi1_on_H[sd.h_part[g]];
    m.chi2[g] = chi2_on_H[sd.h_part[g]];
  }
  for (int g = 0; g < n; ++g) {
    const std::string& nm = sd.G.name(g);
    if (nm != "1" && nm.find_first_of("*^") == std::string::npos) m.named.emplace_back(nm, g);
  }
  return m;
}

std::vector<std::string> validate_model(const GroupModel& m) {
  std::vector<std::string> bad;
  const FiniteGroup& G = *m.G;
  if (!is_prime(m.p)) bad.push_back("p is not prime");
  if (m.k.characteristic() != m.p) bad.push_back("field characteristic differs from p");
  long long np = static_cast<long long>(m.P.size());
  while (np % m.p == 0) np /= m.p;
  if (np != 1) bad.push_back("|P| is not a power of p");
  if (std::gcd(static_cast<long long>(m.H.size()), static_cast<long long>(m.p)) != 1) bad.push_back("p divides |H|");
  if (!G.is_normal(m.P)) bad.push_back("P is not a normal subgroup");
  if (!G.is_subgroup(m.H)) bad.push_back("H is not a subgroup");
  if (m.P.size() * m.H.size() != static_cast<size_t>(G.order())) bad.push_back("|P||H| differs from |G|");
  for (int x : m.P)
    if (x != G.identity() && std::find(m.H.begin(), m.H.end(), x) != m.H.end()) {
      bad.push_back("P and H intersect nontrivially");
      break;
    }
  for (const auto* chi : {&m.chi1, &m.chi2}) {
    std::string nm = chi == &m.chi1 ? "chi1" : "chi2";
    if (static_cast<int>(chi->size()) != G.order()) {
      bad.push_back(nm + " has the wrong length");
      continue;
    }
    for (int v : *chi)
      if (v <= 0 || v >= m.k.size()) {
        bad.push_back(nm + " takes a value outside k^x");
        break;
      }
    for (int x : m.P)
      if ((*chi)[x] != 1) {
        bad.push_back(nm + " does not kill P");
        break;
      }
    auto w = kernels::first_failing_pair(G.order(), G.order(), [&](int a, int b) {
      return (*chi)[G.mul(a, b)] == m.k.mul((*chi)[a], (*chi)[b]);
    });
    if (w.found) bad.push_back(nm + " is not multiplicative");
  }
  return bad;
}

int parse_word(const GroupModel& m, const std::string& word) {
  const FiniteGroup& G = *m.G;
  int r = G.identity();
  size_t pos = 0;
  while (pos <= word.size()) {
    size_t end = word.find('*', pos);
    if (end == std::string::npos) end = word.size();
    std::string tok = word.substr(pos, end - pos);
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) throw std::invalid_argument("empty factor in word '" + word + "'");
    long long e = 1;
    auto caret = tok.find('^');
    std::string base = tok.substr(0, caret);
    if (caret != std::string::npos) {
      try {
        size_t used = 0;
        e = std::stoll(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in '" + tok + "'");
      }
    }
    int g = -1;
    if (base == "1") {
      g = G.identity();
    } else {
      for (const auto& [nm, idx] : m.named)
        if (nm == base) g = idx;
      if (g < 0) g = G.find(base);
    }
    if (g < 0) throw std::invalid_argument("unknown generator '" + base + "'");
    r = G.mul(r, G.pow(g, e));
    pos = end + 1;
  }
  return r;
}

std::vector<int> twist(const GroupModel& m, int i, int j) {
  const auto& ci = i == 1 ? m.chi1 : m.chi2;
  const auto& cj = j == 1 ? m.chi1 : m.chi2;
  std::vector<int> psi(ci.size());
  for (size_t g = 0; g < ci.size(); ++g) psi[g] = m.k.div(cj[g], ci[g]);
  return psi;
}

CocycleSpace cocycle_space(const GroupModel& m, const std::vector<int>& psi) {
  const FiniteGroup& G = *m.G;
  const Field& k = m.k;
  int n = G.order();
  std::vector<Vec> eqs;
  // c(gs) = c(g) + psi(g) c(s) for s in a generating set forces the identity on all pairs
  for (int s : G.generators())
    for (int g = 0; g < n; ++g) {
      Vec row(n, 0);
      int gs = G.mul(g, s);
      row[gs] = k.add(row[gs], 1);
      row[g] = k.sub(row[g], 1);
      row[s] = k.sub(row[s], psi[g]);
      eqs.push_back(std::move(row));
    }
  if (G.order() == 1) eqs.push_back(Vec{1});
  CocycleSpace cs;
  cs.psi = psi;
  cs.cocycles = nullspace(k, eqs, n);
  Vec b(n);
  for (int g = 0; g < n; ++g) b[g] = k.sub(psi[g], 1);
  if (!is_zero(b)) cs.coboundaries.push_back(b);
  for (int h : m.H) eqs.push_back(unit_vector(n, h));
  cs.normalized = nullspace(k, eqs, n);
  return cs;
}

int ext_dimension(const GroupModel& m, int i, int j) {
  if ((i != 1 && i != 2) || (j != 1 && j != 2)) throw std::invalid_argument("character index must be 1 or 2");
  return cocycle_space(m, twist(m, i, j)).h1();
}

bool is_coboundary(const GroupModel& m, const std::vector<int>& psi, const Vec& c) {
  int n = m.G->order();
  Vec b(n);
  for (int g = 0; g < n; ++g) b[g] = m.k.sub(psi[g], 1);
  if (is_zero(b)) return is_zero(c);
  return solve_combination(m.k, {b}, c).has_value();
}

GenericityReport genericity_check(const GroupModel& m) {
  GenericityReport r;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) r.ext[i - 1][j - 1] = ext_dimension(m, i, j);
  if (m.chi1 == m.chi2) r.reasons.push_back("characters equal");
  if (r.ext[0][1] != 1) r.reasons.push_back("ext_dimension(1,2) = " + std::to_string(r.ext[0][1]) + ", expected 1");
  if (r.ext[1][0] != 1) r.reasons.push_back("ext_dimension(2,1) = " + std::to_string(r.ext[1][0]) + ", expected 1");
  r.pass = r.reasons.empty();
  return r;
}

RingMatrix rmat_identity(const LocalRing& R, int dim) {
  RingMatrix a(static_cast<size_t>(dim) * dim, R.zero());
  for (int i = 0; i < dim; ++i) a[i * dim + i] = R.one();
  return a;
}

RingMatrix rmat_mul(const LocalRing& R, const RingMatrix& a, const RingMatrix& b, int dim) {
  RingMatrix c(static_cast<size_t>(dim) * dim, R.zero());
  for (int i = 0; i < dim; ++i)
    for (int l = 0; l < dim; ++l) {
      const Vec& x = a[i * dim + l];
      if (R.is_zero(x)) continue;
      for (int j = 0; j < dim; ++j) c[i * dim + j] = R.add(c[i * dim + j], R.mul(x, b[l * dim + j]));
    }
  return c;
}

bool rmat_equal(const RingMatrix& a, const RingMatrix& b) { return a == b; }

Vec rmat_trace(const LocalRing& R, const RingMatrix& a, int dim) {
  Vec t = R.zero();
  for (int i = 0; i < dim; ++i) t = R.add(t, a[i * dim + i]);
  return t;
}

Vec rmat_det2(const LocalRing& R, const RingMatrix& a) { return R.sub(R.mul(a[0], a[3]), R.mul(a[1], a[2])); }

kernels::Witness multiplicativity_failure(const MatrixRep& rho, kernels::Mode mode) {
  const FiniteGroup& G = *rho.G;
  int n = G.order();
  return kernels::first_failing_pair(
      n, n,
      [&](int a, int b) {
        return rmat_mul(*rho.R, rho.images[a], rho.images[b], rho.dim) == rho.images[G.mul(a, b)];
      },
      mode);
}

MatrixRep rep_from_generators(GroupPtr G, RingPtr R, int dim, const std::vector<int>& gens,
                              const std::vector<RingMatrix>& images) {
  if (gens.size() != images.size()) throw std::invalid_argument("one matrix per generator is required");
  MatrixRep rho{G, R, dim, std::vector<RingMatrix>(G->order())};
  for (const auto& m : images)
    if (static_cast<int>(m.size()) != dim * dim) throw std::invalid_argument("generator matrix has the wrong size");
  rho.images[G->identity()] = rmat_identity(*R, dim);
  std::vector<char> seen(G->order(), 0);
  seen[G->identity()] = 1;
  std::deque<int> todo{G->identity()};
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = G->mul(x, gens[i]);
      RingMatrix m = rmat_mul(*R, rho.images[x], images[i], dim);
      if (!seen[y]) {
        seen[y] = 1;
        rho.images[y] = std::move(m);
        todo.push_back(y);
      } else if (m != rho.images[y]) {
        throw std::invalid_argument("generator images do not define a homomorphism (conflict at " + G->name(y) + ")");
      }
    }
  }
  for (char s : seen)
    if (!s) throw std::invalid_argument("listed generators do not generate G");
  return rho;
}

MatrixRep nonsplit_extension(const GroupModel& m, int top) {
  if (top != 1 && top != 2) throw std::invalid_argument("top must be 1 or 2");
  auto gen = genericity_check(m);
  if (!gen.pass) throw std::invalid_argument("genericity fails: " + gen.reasons.front());
  // top = 1: b = c chi2 with c a cocycle for chi1/chi2; top = 2: b = c chi1 with c for chi2/chi1
  auto psi = top == 1 ? twist(m, 2, 1) : twist(m, 1, 2);
  auto cs = cocycle_space(m, psi);
  const Vec* c = nullptr;
  for (const auto& v : cs.normalized)
    if (!is_coboundary(m, psi, v)) {
      c = &v;
      break;
    }
  if (!c) throw std::logic_error("no cocycle outside the coboundaries");
  auto R = std::make_shared<const LocalRing>(LocalRing::residue_field(m.k));
  int n = m.G->order();
  MatrixRep rho{m.G, R, 2, std::vector<RingMatrix>(n)};
  for (int g = 0; g < n; ++g) {
    RingMatrix a(4, R->zero());
    a[0] = R->scalar(m.chi1[g]);
    a[3] = R->scalar(m.chi2[g]);
    if (top == 1)
      a[1] = R->scalar(m.k.mul((*c)[g], m.chi2[g]));
    else
      a[2] = R->scalar(m.k.mul((*c)[g], m.chi1[g]));
    rho.images[g] = std::move(a);
  }
  return rho;
}

}  // namespace vk
