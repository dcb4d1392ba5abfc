#include "versalkit/local_ring.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace vk {

struct LocalRing::Table {
  std::once_flag once;
  std::vector<std::vector<std::pair<int, int>>> entries;
};

namespace {

using SparseRow = std::vector<std::pair<int, int>>;

// a + c*b for rows sorted by index
SparseRow merge_rows(const Field& k, const SparseRow& a, int c, const SparseRow& b) {
  SparseRow r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      int v = k.mul(c, b[j].second);
      if (v) r.emplace_back(b[j].first, v);
      ++j;
    } else {
      int v = k.add(a[i].second, k.mul(c, b[j].second));
      if (v) r.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

LocalRing LocalRing::residue_field(const Field& k) {
  LocalRing r;
  r.k_ = k;
  r.N_ = 1;
  r.exact_ = true;
  r.build();
  return r;
}

LocalRing LocalRing::artinian(const Field& k, std::vector<std::string> vars, std::vector<Poly> monomial_gens) {
  LocalRing r;
  r.k_ = k;
  r.vars_ = std::move(vars);
  int n = r.nvars();
  std::vector<int> pure(n, 0);
  for (const auto& g : monomial_gens) {
    if (!g.is_monomial()) throw std::invalid_argument("artinian coefficient rings take monomial generators only");
    Mono m = g.terms.begin()->first;
    int support = 0, var = -1;
    for (int i = 0; i < n; ++i)
      if (mono_exp(m, i)) {
        ++support;
        var = i;
      }
    if (support == 1 && (pure[var] == 0 || mono_exp(m, var) < pure[var])) pure[var] = mono_exp(m, var);
  }
  int N = 1;
  for (int i = 0; i < n; ++i) {
    if (pure[i] == 0) throw std::invalid_argument("variable '" + r.vars_[i] + "' is not nilpotent: add a pure power");
    N += pure[i] - 1;
  }
  r.gens_ = std::move(monomial_gens);
  r.N_ = N;
  r.exact_ = true;
  r.build();
  return r;
}

LocalRing LocalRing::truncated(const Field& k, std::vector<std::string> vars, std::vector<Poly> gens, int N) {
  LocalRing r;
  r.k_ = k;
  r.vars_ = std::move(vars);
  r.gens_ = std::move(gens);
  r.N_ = N;
  r.exact_ = false;
  r.build();
  return r;
}

LocalRing LocalRing::with_generators(const std::vector<Poly>& extra) const {
  LocalRing r;
  r.k_ = k_;
  r.vars_ = vars_;
  r.gens_ = gens_;
  for (const auto& g : extra)
    if (!g.is_zero()) r.gens_.push_back(g);
  r.N_ = N_;
  r.exact_ = exact_;
  r.build();
  return r;
}

LocalRing LocalRing::quotient(const std::vector<Elem>& extra) const {
  std::vector<Poly> polys;
  for (const auto& e : extra) polys.push_back(to_poly(e));
  return with_generators(polys);
}

LocalRing LocalRing::adjoin_variables(const std::vector<std::string>& names, const std::vector<Poly>& extra,
                                      int N) const {
  LocalRing r;
  r.k_ = k_;
  r.vars_ = vars_;
  for (const auto& n : names) {
    if (std::find(r.vars_.begin(), r.vars_.end(), n) != r.vars_.end())
      throw std::invalid_argument("variable '" + n + "' already present");
    r.vars_.push_back(n);
  }
  r.gens_ = gens_;
  for (const auto& g : extra)
    if (!g.is_zero()) r.gens_.push_back(g);
  r.N_ = std::max(N, N_);
  r.exact_ = false;
  r.build();
  return r;
}

int LocalRing::variable_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

bool LocalRing::is_monomial() const {
  for (const auto& g : gens_)
    if (g.terms.size() > 1) return false;
  return true;
}

void LocalRing::build() {
  int n = nvars();
  if (n > kMaxVars) throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
  if (N_ < 1 || N_ > kMaxExp) throw std::invalid_argument("truncation degree must lie in 1.." + std::to_string(kMaxExp));
  for (const auto& g : gens_)
    if (g.terms.count(0)) throw std::invalid_argument("generator has a nonzero constant term");

  std::vector<Poly> others;
  mono_gens_.clear();
  for (const auto& g : gens_) {
    if (g.is_zero()) continue;
    if (g.is_monomial())
      mono_gens_.push_back(g.terms.begin()->first);
    else
      others.push_back(g);
  }
  auto dead = [&](Mono m) {
    if (mono_degree(m) >= N_) return true;
    for (Mono g : mono_gens_)
      if (mono_divides(g, m)) return true;
    return false;
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Poly> next;
    for (auto& g : others) {
      Poly h;
      for (const auto& [m, c] : g.terms)
        if (!dead(m)) h.terms[m] = c;
      if (h.is_zero()) {
        changed = true;
        continue;
      }
      if (h.is_monomial()) {
        mono_gens_.push_back(h.terms.begin()->first);
        changed = true;
        continue;
      }
      next.push_back(std::move(h));
    }
    others = std::move(next);
  }
  std::sort(mono_gens_.begin(), mono_gens_.end(), [](Mono a, Mono b) { return mono_degree(a) < mono_degree(b); });
  std::vector<Mono> minimal;
  for (Mono g : mono_gens_) {
    bool redundant = false;
    for (Mono h : minimal)
      if (mono_divides(h, g)) redundant = true;
    if (!redundant) minimal.push_back(g);
  }
  mono_gens_ = minimal;

  alive_.clear();
  std::vector<Mono> frontier{0};
  while (!frontier.empty()) {
    std::vector<Mono> next;
    for (Mono m : frontier) {
      alive_.push_back(m);
      int top = 0;
      for (int i = 0; i < n; ++i)
        if (mono_exp(m, i)) top = i;
      for (int i = top; i < n; ++i) {
        if (mono_degree(m) + 1 >= N_) break;
        Mono m2 = m + mono_var(i);
        if (!dead(m2)) next.push_back(m2);
      }
    }
    frontier = std::move(next);
  }
  std::sort(alive_.begin(), alive_.end(), [n](Mono a, Mono b) { return mono_less(a, b, n); });
  std::unordered_map<Mono, int> index;
  for (size_t i = 0; i < alive_.size(); ++i) index[alive_[i]] = static_cast<int>(i);

  pivot_row_.assign(alive_.size(), -1);
  rows_.clear();
  auto insert = [&](SparseRow row) {
    while (!row.empty()) {
      int pr = pivot_row_[row[0].first];
      if (pr < 0) break;
      row = merge_rows(k_, row, k_.neg(row[0].second), rows_[pr]);
    }
    if (row.empty()) return;
    int s = k_.inv(row[0].second);
    for (auto& [j, v] : row) v = k_.mul(s, v);
    pivot_row_[row[0].first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
  };
  for (const auto& g : others) {
    int low = g.lowest_degree();
    for (Mono m : alive_) {
      if (mono_degree(m) + low >= N_) break;
      SparseRow row;
      for (const auto& [t, c] : g.terms) {
        if (mono_degree(m) + mono_degree(t) >= N_) continue;
        Mono mt = mono_mul(m, t);
        auto it = index.find(mt);
        if (it == index.end()) continue;
        row.emplace_back(it->second, c);
      }
      std::sort(row.begin(), row.end());
      insert(std::move(row));
    }
  }
  basis_.clear();
  alive_to_basis_.assign(alive_.size(), -1);
  for (size_t i = 0; i < alive_.size(); ++i)
    if (pivot_row_[i] < 0) {
      alive_to_basis_[i] = static_cast<int>(basis_.size());
      basis_.push_back(alive_[i]);
    }
  if (basis_.empty() || basis_[0] != 0) throw std::logic_error("ring collapsed to zero");
  table_ = std::make_shared<Table>();
}

Poly LocalRing::normal_form(const Poly& p, bool* overflow) const {
  int n = nvars();
  std::map<int, int> acc;
  bool over = false;
  for (const auto& [m, c] : p.terms) {
    if (mono_degree(m) >= N_) {
      over = true;
      continue;
    }
    auto it = std::lower_bound(alive_.begin(), alive_.end(), m, [n](Mono a, Mono b) { return mono_less(a, b, n); });
    if (it == alive_.end() || *it != m) continue;
    int idx = static_cast<int>(it - alive_.begin());
    acc[idx] = k_.add(acc[idx], c);
  }
  if (overflow) *overflow = over;
  Poly out;
  while (!acc.empty()) {
    auto it = acc.begin();
    int idx = it->first, c = it->second;
    acc.erase(it);
    if (!c) continue;
    int pr = pivot_row_[idx];
    if (pr < 0) {
      out.terms[alive_[idx]] = c;
      continue;
    }
    for (const auto& [j, v] : rows_[pr]) {
      if (j == idx) continue;
      acc[j] = k_.sub(acc[j], k_.mul(c, v));
    }
  }
  return out;
}

LocalRing::Elem LocalRing::one() const { return scalar(1); }

LocalRing::Elem LocalRing::scalar(int c) const {
  Elem e = zero();
  e[0] = c;
  return e;
}

LocalRing::Elem LocalRing::variable(int i) const { return from_poly(poly_mono(mono_var(i))); }

LocalRing::Elem LocalRing::from_poly(const Poly& p) const {
  Poly r = normal_form(p);
  Elem e = zero();
  int n = nvars();
  for (const auto& [m, c] : r.terms) {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), m, [n](Mono a, Mono b) { return mono_less(a, b, n); });
    e[it - basis_.begin()] = c;
  }
  return e;
}

LocalRing::Elem LocalRing::parse(const std::string& text) const { return from_poly(parse_poly(text, vars_, k_)); }

Poly LocalRing::to_poly(const Elem& x) const {
  Poly p;
  for (int i = 0; i < dim(); ++i)
    if (x[i]) p.terms[basis_[i]] = x[i];
  return p;
}

LocalRing::Elem LocalRing::add(const Elem& a, const Elem& b) const {
  Elem r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = k_.add(a[i], b[i]);
  return r;
}

LocalRing::Elem LocalRing::sub(const Elem& a, const Elem& b) const {
  Elem r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = k_.sub(a[i], b[i]);
  return r;
}

LocalRing::Elem LocalRing::neg(const Elem& a) const {
  Elem r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = k_.neg(a[i]);
  return r;
}

LocalRing::Elem LocalRing::scale(int c, const Elem& a) const { return scaled(k_, c, a); }

const std::vector<std::vector<std::pair<int, int>>>& LocalRing::table() const {
  std::call_once(table_->once, [this] {
    int d = dim();
    auto& t = table_->entries;
    t.assign(static_cast<size_t>(d) * d, {});
    int n = nvars();
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        if (mono_degree(basis_[i]) + mono_degree(basis_[j]) >= N_) continue;
        Poly r = normal_form(poly_mono(mono_mul(basis_[i], basis_[j])));
        SparseRow row;
        for (const auto& [m, c] : r.terms) {
          auto it =
              std::lower_bound(basis_.begin(), basis_.end(), m, [n](Mono a, Mono b) { return mono_less(a, b, n); });
          row.emplace_back(static_cast<int>(it - basis_.begin()), c);
        }
        t[static_cast<size_t>(i) * d + j] = row;
        t[static_cast<size_t>(j) * d + i] = row;
      }
  });
  return table_->entries;
}

LocalRing::Elem LocalRing::mul(const Elem& a, const Elem& b) const {
  int d = dim();
  Elem r(d, 0);
  if (d == 1) {
    r[0] = k_.mul(a[0], b[0]);
    return r;
  }
  const auto& t = table();
  for (int i = 0; i < d; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < d; ++j) {
      if (!b[j]) continue;
      int c = k_.mul(a[i], b[j]);
      for (const auto& [idx, v] : t[static_cast<size_t>(i) * d + j]) r[idx] = k_.add(r[idx], k_.mul(c, v));
    }
  }
  return r;
}

LocalRing::Elem LocalRing::pow(const Elem& a, int e) const {
  Elem r = one();
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

LocalRing::Elem LocalRing::inverse(const Elem& a) const {
  int u = residue(a);
  if (!u) throw std::domain_error("element " + format(a) + " is not a unit");
  int ui = k_.inv(u);
  Elem v = scale(ui, a);
  Elem nn = neg(sub(v, one()));
  Elem result = one();
  Elem power = one();
  for (int i = 0; i <= N_; ++i) {
    power = mul(power, nn);
    if (is_zero(power)) break;
    result = add(result, power);
  }
  return scale(ui, result);
}

int LocalRing::coefficient(const Elem& a, Mono m) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[i] == m) return a[i];
  return 0;
}

std::vector<long long> LocalRing::hilbert_lengths() const {
  std::vector<long long> counts(N_, 0);
  for (Mono m : basis_) counts[mono_degree(m)]++;
  for (int i = 1; i < N_; ++i) counts[i] += counts[i - 1];
  return counts;
}

std::string LocalRing::format(const Elem& a) const { return format_poly(to_poly(a), vars_, k_); }

std::vector<std::string> LocalRing::basis_labels() const {
  std::vector<std::string> out;
  for (int i = 0; i < dim(); ++i) out.push_back(basis_label(i));
  return out;
}

RingMap::RingMap(RingPtr src, RingPtr dst, std::vector<Vec> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src_->nvars()) throw std::invalid_argument("ring map needs one image per variable");
  for (const auto& b : src_->basis()) basis_images_.push_back(apply_poly(poly_mono(b)));
}

Vec RingMap::apply_poly(const Poly& p) const {
  const LocalRing& D = *dst_;
  Vec r = D.zero();
  for (const auto& [m, c] : p.terms) {
    Vec term = D.scalar(c);
    for (int i = 0; i < src_->nvars(); ++i) {
      int e = mono_exp(m, i);
      if (e) term = D.mul(term, D.pow(images_[i], e));
    }
    r = D.add(r, term);
  }
  return r;
}

Vec RingMap::apply(const Vec& x) const {
  const LocalRing& D = *dst_;
  Vec r = D.zero();
  for (int i = 0; i < src_->dim(); ++i)
    if (x[i]) axpy(D.field(), x[i], basis_images_[i], r);
  return r;
}

bool RingMap::well_defined(std::string* why) const {
  auto fail = [why](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  for (int i = 0; i < src_->nvars(); ++i)
    if (!dst_->in_max_ideal(images_[i])) return fail("image of " + src_->vars()[i] + " is a unit");
  for (const auto& g : src_->generators())
    if (!dst_->is_zero(apply_poly(g)))
      return fail("relation " + format_poly(g, src_->vars(), src_->field()) + " does not map to zero");
  if (!src_->exact()) {
    int top = 0;
    for (int i = 0; i < dst_->dim(); ++i) top = std::max(top, dst_->basis_degree(i));
    if (top >= src_->truncation()) return fail("target is not killed by the source truncation");
  }
  return true;
}

RingMap inclusion_by_name(RingPtr src, RingPtr dst) {
  std::vector<Vec> images;
  for (const auto& v : src->vars()) {
    int j = dst->variable_index(v);
    images.push_back(j >= 0 ? dst->variable(j) : dst->zero());
  }
  return RingMap(std::move(src), std::move(dst), std::move(images));
}

}  // namespace vk
