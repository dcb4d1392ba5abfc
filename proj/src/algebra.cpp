#include "versalkit/algebra.hpp"

#include <deque>
#include <stdexcept>

namespace vk {

namespace {

void add_sparse(const Field& k, int c, const SparseVec& s, Vec& out) {
  for (auto [i, v] : s) out[i] = k.add(out[i], k.mul(c, v));
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i]) s.emplace_back(i, v[i]);
  return s;
}

std::vector<int> support(const Vec& v) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i]) s.push_back(i);
  return s;
}

Vec slice(const Vec& v, int start, int len) { return Vec(v.begin() + start, v.begin() + start + len); }

// k-linear map as a matrix whose column j is f(e_j)
Matrix matrix_of(int rows, int cols, const std::function<Vec(int)>& column) {
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    Vec c = column(j);
    for (int i = 0; i < rows; ++i) m(i, j) = c[i];
  }
  return m;
}

// equations for F (rows x cols, unknown F[r][l] at r * cols + l) with F A = B F,
// where A is cols x cols and B is rows x rows
void intertwining_equations(const Field& k, const Matrix& A, const Matrix& B, std::vector<Vec>& eqs) {
  int rows = B.rows, cols = A.rows;
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j < cols; ++j) {
      Vec e(static_cast<size_t>(rows) * cols, 0);
      for (int l = 0; l < cols; ++l)
        if (A(l, j)) e[r * cols + l] = k.add(e[r * cols + l], A(l, j));
      for (int l = 0; l < rows; ++l)
        if (B(r, l)) e[l * cols + j] = k.sub(e[l * cols + j], B(r, l));
      if (!is_zero(e)) eqs.push_back(std::move(e));
    }
}

}  // namespace

AssocAlgebra::AssocAlgebra(RingPtr R, int n, std::vector<SparseVec> table, std::vector<std::vector<SparseVec>> ring_action,
                           Vec unit, std::vector<std::string> labels)
    : R_(std::move(R)),
      n_(n),
      table_(std::move(table)),
      ract_(std::move(ring_action)),
      unit_(std::move(unit)),
      labels_(std::move(labels)) {
  if (static_cast<int>(table_.size()) != n_ * n_) throw std::invalid_argument("structure table has the wrong size");
  if (static_cast<int>(ract_.size()) != R_->dim()) throw std::invalid_argument("ring action has the wrong size");
  if (static_cast<int>(unit_.size()) != n_) throw std::invalid_argument("unit has the wrong length");
  if (labels_.empty())
    for (int i = 0; i < n_; ++i) labels_.push_back("b" + std::to_string(i));
}

AssocAlgebra AssocAlgebra::group_algebra(GroupPtr G, RingPtr R) {
  AssocAlgebra a(R, 0, {}, std::vector<std::vector<SparseVec>>(R->dim()), {}, {"x"});
  int dr = R->dim();
  a.group_kind_ = true;
  a.n_ = G->order() * dr;
  a.labels_.clear();
  for (int g = 0; g < G->order(); ++g)
    for (int mu = 0; mu < dr; ++mu) {
      std::string ring_part = R->basis_label(mu);
      if (mu == 0)
        a.labels_.push_back(G->name(g));
      else if (G->name(g) == "1")
        a.labels_.push_back(ring_part);
      else
        a.labels_.push_back(G->name(g) + "*" + ring_part);
    }
  a.unit_ = a.basis(G->identity() * dr);
  std::vector<Vec> images;
  for (int g = 0; g < G->order(); ++g) images.push_back(a.basis(g * dr));
  std::vector<Vec> gens;
  for (int s : G->generators()) gens.push_back(images[s]);
  a.gens_ = gens;
  a.set_group_images(G, std::move(images));
  return a;
}

AssocAlgebra AssocAlgebra::matrix_algebra(RingPtr R, int n) {
  int dr = R->dim();
  int N = n * n * dr;
  auto idx = [&](int i, int j, int mu) { return (i * n + j) * dr + mu; };
  std::vector<SparseVec> table(static_cast<size_t>(N) * N);
  std::vector<std::vector<SparseVec>> ract(dr, std::vector<SparseVec>(N));
  std::vector<Vec> rb;
  for (int mu = 0; mu < dr; ++mu) rb.push_back(unit_vector(dr, mu));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int mu = 0; mu < dr; ++mu) {
        std::string l = "E" + std::to_string(i + 1) + std::to_string(j + 1);
        if (mu) l += "*" + R->basis_label(mu);
        labels.push_back(l);
        for (int nu = 0; nu < dr; ++nu) {
          Vec prod = R->mul(rb[mu], rb[nu]);
          SparseVec s;
          for (int kappa = 0; kappa < dr; ++kappa)
            if (prod[kappa]) s.emplace_back(idx(i, j, kappa), prod[kappa]);
          ract[nu][idx(i, j, mu)] = s;
          for (int l2 = 0; l2 < n; ++l2) {
            SparseVec t;
            for (int kappa = 0; kappa < dr; ++kappa)
              if (prod[kappa]) t.emplace_back(idx(i, l2, kappa), prod[kappa]);
            table[static_cast<size_t>(idx(i, j, mu)) * N + idx(j, l2, nu)] = t;
          }
        }
      }
  Vec unit(N, 0);
  for (int i = 0; i < n; ++i) unit[idx(i, i, 0)] = 1;
  return AssocAlgebra(R, N, std::move(table), std::move(ract), std::move(unit), std::move(labels));
}

AssocAlgebra::Elem AssocAlgebra::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  axpy(field(), 1, b, r);
  return r;
}

AssocAlgebra::Elem AssocAlgebra::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  axpy(field(), field().neg(1), b, r);
  return r;
}

AssocAlgebra::Elem AssocAlgebra::scale(int c, const Elem& a) const { return scaled(field(), c, a); }

AssocAlgebra::Elem AssocAlgebra::mul(const Elem& a, const Elem& b) const {
  const Field& k = field();
  Elem r(n_, 0);
  if (group_kind_) {
    int dr = R_->dim();
    int ng = G_->order();
    std::vector<std::pair<int, Vec>> ba, bb;
    for (int g = 0; g < ng; ++g) {
      Vec x = slice(a, g * dr, dr);
      if (!is_zero(x)) ba.emplace_back(g, std::move(x));
      Vec y = slice(b, g * dr, dr);
      if (!is_zero(y)) bb.emplace_back(g, std::move(y));
    }
    for (const auto& [g, x] : ba)
      for (const auto& [h, y] : bb) {
        Vec p = R_->mul(x, y);
        int base = G_->mul(g, h) * dr;
        for (int mu = 0; mu < dr; ++mu)
          if (p[mu]) r[base + mu] = k.add(r[base + mu], p[mu]);
      }
    return r;
  }
  auto sa = support(a), sb = support(b);
  for (int i : sa)
    for (int j : sb) add_sparse(k, k.mul(a[i], b[j]), table_[static_cast<size_t>(i) * n_ + j], r);
  return r;
}

AssocAlgebra::Elem AssocAlgebra::rscale(const LocalRing::Elem& s, const Elem& a) const {
  const Field& k = field();
  Elem r(n_, 0);
  if (group_kind_) {
    int dr = R_->dim();
    for (int g = 0; g < G_->order(); ++g) {
      Vec x = slice(a, g * dr, dr);
      if (is_zero(x)) continue;
      Vec p = R_->mul(s, x);
      for (int mu = 0; mu < dr; ++mu) r[g * dr + mu] = p[mu];
    }
    return r;
  }
  auto sa = support(a);
  for (int mu = 0; mu < R_->dim(); ++mu) {
    if (!s[mu]) continue;
    for (int j : sa) add_sparse(k, k.mul(s[mu], a[j]), ract_[mu][j], r);
  }
  return r;
}

AssocAlgebra::Elem AssocAlgebra::rbasis_scale(int mu, const Elem& a) const {
  return rscale(unit_vector(R_->dim(), mu), a);
}

std::string AssocAlgebra::format(const Elem& a) const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (!a[i]) continue;
    if (!s.empty()) s += " + ";
    if (a[i] != 1) s += field().format(a[i]) + "*";
    s += labels_[i];
  }
  return s.empty() ? "0" : s;
}

void AssocAlgebra::set_group_images(GroupPtr G, std::vector<Elem> images) {
  if (static_cast<int>(images.size()) != G->order()) throw std::invalid_argument("one image per group element is required");
  G_ = std::move(G);
  gimg_ = std::move(images);
}

kernels::Witness AssocAlgebra::associativity_failure(kernels::Mode mode) const {
  std::vector<Elem> b;
  for (int i = 0; i < n_; ++i) b.push_back(basis(i));
  return kernels::first_failing_triple(
      n_, [&](int x, int y, int z) { return mul(mul(b[x], b[y]), b[z]) == mul(b[x], mul(b[y], b[z])); }, mode);
}

bool AssocAlgebra::unit_law() const {
  for (int i = 0; i < n_; ++i) {
    Elem e = basis(i);
    if (mul(unit_, e) != e || mul(e, unit_) != e) return false;
  }
  return true;
}

EchelonSpace ideal_closure(const AssocAlgebra& alg, const std::vector<Vec>& gens, bool all_basis) {
  const LocalRing& R = alg.ring();
  EchelonSpace J(alg.field(), alg.dim());
  std::vector<Vec> mults;
  if (all_basis || alg.generators().empty())
    for (int i = 0; i < alg.dim(); ++i) mults.push_back(alg.basis(i));
  else
    mults = alg.generators();
  std::vector<LocalRing::Elem> vars;
  for (int i = 0; i < R.nvars(); ++i) {
    auto x = R.variable(i);
    if (!R.is_zero(x)) vars.push_back(std::move(x));
  }
  std::deque<Vec> todo;
  for (const auto& g : gens)
    if (J.add(g)) todo.push_back(g);
  while (!todo.empty()) {
    Vec v = std::move(todo.front());
    todo.pop_front();
    auto offer = [&](Vec w) {
      if (J.add(w)) todo.push_back(std::move(w));
    };
    for (const auto& m : mults) {
      offer(alg.mul(m, v));
      offer(alg.mul(v, m));
    }
    for (const auto& x : vars) offer(alg.rscale(x, v));
  }
  return J;
}

Vec QuotientAlgebra::project(const Vec& v) const {
  Vec r = ideal->reduce(v);
  Vec out(complement.size());
  for (size_t i = 0; i < complement.size(); ++i) out[i] = r[complement[i]];
  return out;
}

Vec QuotientAlgebra::lift(const Vec& q) const {
  Vec out(parent_dim, 0);
  for (size_t i = 0; i < complement.size(); ++i) out[complement[i]] = q[i];
  return out;
}

QuotientAlgebra quotient_algebra(const AssocAlgebra& parent, const EchelonSpace& J) {
  const Field& k = parent.field();
  int n = parent.dim();
  EchelonSpace probe = J;
  std::vector<int> complement;
  std::vector<char> in_complement(n, 0);
  for (int j = 0; j < n; ++j)
    if (probe.add(unit_vector(n, j))) {
      complement.push_back(j);
      in_complement[j] = 1;
    }
  std::vector<int> priority;
  for (int j = 0; j < n; ++j)
    if (!in_complement[j]) priority.push_back(j);
  for (int j : complement) priority.push_back(j);
  auto ideal = std::make_shared<EchelonSpace>(k, n, priority);
  for (const auto& row : J.rows()) ideal->add(row);

  QuotientAlgebra q{AssocAlgebra(parent.ring_ptr(), 0, {}, std::vector<std::vector<SparseVec>>(parent.ring().dim()), {},
                                 {"x"}),
                    complement, ideal, n};
  int m = static_cast<int>(complement.size());
  std::vector<SparseVec> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<size_t>(i) * m + j] =
          to_sparse(q.project(parent.mul(parent.basis(complement[i]), parent.basis(complement[j]))));
  std::vector<std::vector<SparseVec>> ract(parent.ring().dim(), std::vector<SparseVec>(m));
  for (int mu = 0; mu < parent.ring().dim(); ++mu)
    for (int j = 0; j < m; ++j) ract[mu][j] = to_sparse(q.project(parent.rbasis_scale(mu, parent.basis(complement[j]))));
  std::vector<std::string> labels;
  for (int j : complement) labels.push_back(parent.labels()[j]);
  q.alg = AssocAlgebra(parent.ring_ptr(), m, std::move(table), std::move(ract), q.project(parent.unit()),
                       std::move(labels));
  std::vector<Vec> gens;
  for (const auto& g : parent.generators()) gens.push_back(q.project(g));
  q.alg.set_generators(std::move(gens));
  if (parent.group()) {
    std::vector<Vec> images;
    for (const auto& g : parent.group_images()) images.push_back(q.project(g));
    q.alg.set_group_images(parent.group(), std::move(images));
  }
  return q;
}

LocalRing::Elem ChAlgebra::trace(const Vec& a) const {
  const LocalRing& R = q.alg.ring();
  LocalRing::Elem t = R.zero();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i]) t = R.add(t, R.scale(a[i], trace_on_basis[i]));
  return t;
}

TraceFn ChAlgebra::trace_fn() const {
  return [this](const Vec& a) { return trace(a); };
}

Vec cayley_hamilton_element(const AssocAlgebra& A, const DeterminantPair& det, int g) {
  const Vec& x = A.group_images()[g];
  Vec r = A.mul(x, x);
  r = A.sub(r, A.rscale(det.t[g], x));
  return A.add(r, A.rscale(det.d[g], A.unit()));
}

ChAlgebra ch_quotient(std::shared_ptr<const AssocAlgebra> group_alg, const DeterminantPair& det) {
  if (!group_alg->is_group_algebra()) throw std::invalid_argument("ch_quotient needs a group algebra");
  auto rep = validate(det);
  if (!rep.pass) throw std::invalid_argument("determinant fails " + rep.axiom + ": " + rep.detail);
  std::vector<Vec> gens;
  for (int g = 0; g < det.G->order(); ++g) gens.push_back(cayley_hamilton_element(*group_alg, det, g));
  EchelonSpace J = ideal_closure(*group_alg, gens);
  QuotientAlgebra q = quotient_algebra(*group_alg, J);
  const LocalRing& R = group_alg->ring();
  int dr = R.dim();
  std::vector<LocalRing::Elem> tb;
  for (int c : q.complement) tb.push_back(R.mul(det.t[c / dr], unit_vector(dr, c % dr)));
  return ChAlgebra{group_alg, std::move(q), det, std::move(tb)};
}

Vec character_idempotent(const AssocAlgebra& alg, const std::vector<int>& H, const std::vector<int>& chi) {
  if (!alg.group()) throw std::invalid_argument("algebra carries no group images");
  const Field& k = alg.field();
  int order = k.from_int(static_cast<long long>(H.size()));
  if (order == 0) throw std::invalid_argument("|H| is not invertible in the coefficient ring");
  const FiniteGroup& G = *alg.group();
  Vec e = alg.zero();
  for (int h : H) axpy(k, chi[h], alg.group_images()[G.inv(h)], e);
  return alg.scale(k.inv(order), e);
}

bool is_idempotent(const AssocAlgebra& alg, const Vec& e) { return alg.mul(e, e) == e; }

Peirce peirce_decomposition(const AssocAlgebra& alg, const Vec& e1, const Vec& e2) {
  if (!is_idempotent(alg, e1) || !is_idempotent(alg, e2)) throw std::invalid_argument("inputs are not idempotents");
  if (!is_zero(alg.mul(e1, e2)) || !is_zero(alg.mul(e2, e1))) throw std::invalid_argument("idempotents are not orthogonal");
  if (alg.add(e1, e2) != alg.unit()) throw std::invalid_argument("idempotents do not sum to 1");
  Peirce p;
  const Vec* e[2] = {&e1, &e2};
  int total = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      EchelonSpace s(alg.field(), alg.dim());
      for (int b = 0; b < alg.dim(); ++b) s.add(alg.mul(alg.mul(*e[i], alg.basis(b)), *e[j]));
      p.block[i][j] = s.rows();
      total += s.dim();
    }
  p.complete = total == alg.dim();
  return p;
}

std::optional<LocalRing::Elem> solve_scalar(const AssocAlgebra& alg, const Vec& x, const Vec& target) {
  std::vector<Vec> cols;
  for (int mu = 0; mu < alg.ring().dim(); ++mu) cols.push_back(alg.rbasis_scale(mu, x));
  return solve_combination(alg.field(), cols, target);
}

bool GmaFrame::relations_hold() const {
  for (const auto& [name, ok] : relations)
    if (!ok) return false;
  return !relations.empty();
}

namespace {

// generator of the block e_i A e_j, which must be free of rank 1 over R
Vec block_generator(const AssocAlgebra& alg, const Vec& ei, const Vec& ej, int& chosen, bool& from_group,
                    const char* name) {
  const LocalRing& R = alg.ring();
  const Field& k = alg.field();
  EchelonSpace block(k, alg.dim());
  for (int b = 0; b < alg.dim(); ++b) block.add(alg.mul(alg.mul(ei, alg.basis(b)), ej));
  EchelonSpace mblock(k, alg.dim());
  for (const auto& v : block.rows())
    for (int i = 0; i < R.nvars(); ++i) mblock.add(alg.rscale(R.variable(i), v));
  std::vector<Vec> candidates;
  from_group = static_cast<bool>(alg.group());
  if (from_group)
    candidates = alg.group_images();
  else
    for (int b = 0; b < alg.dim(); ++b) candidates.push_back(alg.basis(b));
  for (size_t c = 0; c < candidates.size(); ++c) {
    Vec v = alg.mul(alg.mul(ei, candidates[c]), ej);
    if (mblock.contains(v)) continue;
    std::vector<Vec> span;
    for (int mu = 0; mu < R.dim(); ++mu) span.push_back(alg.rbasis_scale(mu, v));
    if (rank(k, span, alg.dim()) != R.dim() || block.dim() != R.dim())
      throw FrameError(std::string("block ") + name + " is not free of rank 1");
    chosen = static_cast<int>(c);
    return v;
  }
  throw FrameError(std::string("block ") + name + " is not free of rank 1");
}

}  // namespace

GmaFrame gma_frame(const AssocAlgebra& alg, const Vec& e1, const Vec& e2, const TraceFn& t) {
  const LocalRing& R = alg.ring();
  peirce_decomposition(alg, e1, e2);
  GmaFrame f;
  f.e1 = e1;
  f.e2 = e2;
  f.phi12 = block_generator(alg, e1, e2, f.psi1, f.psi_from_group, "e1 A e2");
  f.phi21 = block_generator(alg, e2, e1, f.psi2, f.psi_from_group, "e2 A e1");
  Vec p12_21 = alg.mul(f.phi12, f.phi21);
  Vec p21_12 = alg.mul(f.phi21, f.phi12);
  auto c1 = solve_scalar(alg, e1, p12_21);
  auto c2 = solve_scalar(alg, e2, p21_12);
  if (!c1 || !c2) throw FrameError("phi12 phi21 or phi21 phi12 is not a scalar multiple of its idempotent");
  if (*c1 != *c2) throw FrameError("the scalars c1 = " + R.format(*c1) + " and c2 = " + R.format(*c2) + " disagree");
  f.c = *c1;

  auto rel = [&f](std::string name, bool ok) { f.relations.emplace_back(std::move(name), ok); };
  Vec zero = alg.zero();
  rel("e1^2 = e1", alg.mul(e1, e1) == e1);
  rel("e2^2 = e2", alg.mul(e2, e2) == e2);
  rel("e1 e2 = 0", alg.mul(e1, e2) == zero);
  rel("e2 e1 = 0", alg.mul(e2, e1) == zero);
  rel("e1 phi12 = phi12", alg.mul(e1, f.phi12) == f.phi12);
  rel("phi12 e2 = phi12", alg.mul(f.phi12, e2) == f.phi12);
  rel("e2 phi21 = phi21", alg.mul(e2, f.phi21) == f.phi21);
  rel("phi21 e1 = phi21", alg.mul(f.phi21, e1) == f.phi21);
  rel("e2 phi12 = 0", alg.mul(e2, f.phi12) == zero);
  rel("phi12 e1 = 0", alg.mul(f.phi12, e1) == zero);
  rel("e1 phi21 = 0", alg.mul(e1, f.phi21) == zero);
  rel("phi21 e2 = 0", alg.mul(f.phi21, e2) == zero);
  rel("phi12^2 = 0", alg.mul(f.phi12, f.phi12) == zero);
  rel("phi21^2 = 0", alg.mul(f.phi21, f.phi21) == zero);
  rel("phi12 phi21 = c e1", p12_21 == alg.rscale(f.c, e1));
  rel("phi21 phi12 = c e2", p21_12 == alg.rscale(f.c, e2));
  auto te1 = t(e1);
  bool trace_ok = R.is_unit(te1) && R.mul(t(p12_21), R.inverse(te1)) == f.c && t(p12_21) == t(p21_12);
  rel("c = t(phi12 phi21) / t(e1)", trace_ok);
  std::vector<Vec> span;
  for (const Vec* g : {&f.e1, &f.phi12, &f.phi21, &f.e2})
    for (int mu = 0; mu < R.dim(); ++mu) span.push_back(alg.rbasis_scale(mu, *g));
  rel("{e1, phi12, phi21, e2} is an R-basis",
      alg.dim() == 4 * R.dim() && rank(alg.field(), span, alg.dim()) == alg.dim());
  return f;
}

std::array<LocalRing::Elem, 4> frame_coordinates(const AssocAlgebra& alg, const GmaFrame& f, const Vec& a) {
  const LocalRing& R = alg.ring();
  int dr = R.dim();
  std::vector<Vec> cols;
  for (const Vec* g : {&f.e1, &f.phi12, &f.phi21, &f.e2})
    for (int mu = 0; mu < dr; ++mu) cols.push_back(alg.rbasis_scale(mu, *g));
  auto sol = solve_combination(alg.field(), cols, a);
  if (!sol) throw FrameError("element is not in the span of the frame");
  std::array<LocalRing::Elem, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = slice(*sol, i * dr, dr);
  return out;
}

std::vector<Vec> centre(const AssocAlgebra& alg) {
  const Field& k = alg.field();
  int n = alg.dim();
  std::vector<Vec> basis;
  for (int i = 0; i < n; ++i) basis.push_back(alg.basis(i));
  std::vector<Vec> eqs;
  for (int a = 0; a < n; ++a) {
    std::vector<Vec> comm;
    for (int j = 0; j < n; ++j) comm.push_back(alg.sub(alg.mul(basis[j], basis[a]), alg.mul(basis[a], basis[j])));
    for (int r = 0; r < n; ++r) {
      Vec e(n);
      for (int j = 0; j < n; ++j) e[j] = comm[j][r];
      if (!is_zero(e)) eqs.push_back(std::move(e));
    }
  }
  return nullspace(k, eqs, n);
}

std::vector<Vec> gma_centre(const AssocAlgebra& alg, const GmaFrame& f) {
  const LocalRing& R = alg.ring();
  const Field& k = alg.field();
  int dr = R.dim();
  EchelonSpace z(k, alg.dim());
  Vec one = alg.add(f.e1, f.e2);
  for (int mu = 0; mu < dr; ++mu) z.add(alg.rbasis_scale(mu, one));
  std::vector<Vec> mult_c;
  for (int r = 0; r < dr; ++r) {
    Vec row(dr);
    for (int mu = 0; mu < dr; ++mu) row[mu] = R.mul(f.c, unit_vector(dr, mu))[r];
    mult_c.push_back(row);
  }
  for (const auto& a : nullspace(k, mult_c, dr)) z.add(alg.rscale(a, f.e1));
  return z.rows();
}

EndReport opposite_endo_check(const AssocAlgebra& alg) {
  const Field& k = alg.field();
  const LocalRing& R = alg.ring();
  int n = alg.dim();
  std::vector<Vec> mults = alg.generators();
  if (mults.empty())
    for (int i = 0; i < n; ++i) mults.push_back(alg.basis(i));
  std::vector<Vec> eqs;
  for (const auto& s : mults) {
    Matrix L = matrix_of(n, n, [&](int j) { return alg.mul(s, alg.basis(j)); });
    intertwining_equations(k, L, L, eqs);
  }
  for (int i = 0; i < R.nvars(); ++i) {
    auto x = R.variable(i);
    Matrix L = matrix_of(n, n, [&](int j) { return alg.rscale(x, alg.basis(j)); });
    intertwining_equations(k, L, L, eqs);
  }
  auto ends = nullspace(k, eqs, n * n);
  std::vector<Matrix> right;
  std::vector<Vec> right_flat;
  for (int a = 0; a < n; ++a) {
    Matrix Ra = matrix_of(n, n, [&](int j) { return alg.mul(alg.basis(j), alg.basis(a)); });
    right_flat.push_back(Ra.a);
    right.push_back(std::move(Ra));
  }
  EndReport r;
  r.end_dim = static_cast<int>(ends.size());
  r.right_mult_dim = rank(k, right_flat, n * n);
  r.match = same_span(k, ends, right_flat, n * n);
  r.anti_mult = true;
  for (int a = 0; a < n && r.anti_mult; ++a)
    for (int b = 0; b < n && r.anti_mult; ++b) {
      Matrix lhs = mat_mul(k, right[a], right[b]);
      Vec ba = alg.mul(alg.basis(b), alg.basis(a));
      Matrix rhs(n, n);
      for (int c = 0; c < n; ++c)
        if (ba[c]) rhs = mat_add(k, rhs, mat_scale(k, ba[c], right[c]));
      r.anti_mult = lhs == rhs;
    }
  return r;
}

InvolutionReport ch_involution(const ChAlgebra& ch) {
  const AssocAlgebra& P = *ch.group_alg;
  const AssocAlgebra& A = ch.alg();
  const LocalRing& R = P.ring();
  const FiniteGroup& G = *ch.det.G;
  const Field& k = P.field();
  int dr = R.dim();
  auto iota = [&](const Vec& v) {
    Vec out(P.dim(), 0);
    for (int g = 0; g < G.order(); ++g) {
      Vec block = slice(v, g * dr, dr);
      if (is_zero(block)) continue;
      Vec img = R.mul(block, ch.det.d[g]);
      int base = G.inv(g) * dr;
      for (int mu = 0; mu < dr; ++mu) out[base + mu] = k.add(out[base + mu], img[mu]);
    }
    return out;
  };
  InvolutionReport r;
  r.ideal_stable = true;
  for (const auto& row : ch.q.ideal->rows())
    if (!ch.q.ideal->contains(iota(row))) {
      r.ideal_stable = false;
      break;
    }
  for (int j = 0; j < A.dim(); ++j) r.images.push_back(ch.q.project(iota(ch.q.lift(A.basis(j)))));
  r.anti_mult = true;
  for (int a = 0; a < A.dim() && r.anti_mult; ++a)
    for (int b = 0; b < A.dim() && r.anti_mult; ++b)
      r.anti_mult = apply_involution(A, r, A.mul(A.basis(a), A.basis(b))) == A.mul(r.images[b], r.images[a]);
  r.square_identity = true;
  for (int j = 0; j < A.dim(); ++j)
    if (apply_involution(A, r, r.images[j]) != A.basis(j)) r.square_identity = false;
  return r;
}

Vec apply_involution(const AssocAlgebra& alg, const InvolutionReport& inv, const Vec& a) {
  Vec out = alg.zero();
  for (int j = 0; j < alg.dim(); ++j)
    if (a[j]) axpy(alg.field(), a[j], inv.images[j], out);
  return out;
}

ModuleIso block_module_compare(const AssocAlgebra& alg, const Vec& e, const MatrixRep& rho) {
  const Field& k = alg.field();
  const LocalRing& R = alg.ring();
  if (!alg.group()) throw std::invalid_argument("algebra carries no group images");
  if (rho.R->dim() != R.dim() || !(rho.R->field() == k)) throw std::invalid_argument("coefficient rings differ");
  int dr = R.dim();
  EchelonSpace M(k, alg.dim());
  for (int b = 0; b < alg.dim(); ++b) M.add(alg.mul(alg.basis(b), e));
  int m = M.dim();
  int dv = rho.dim * dr;
  ModuleIso out;
  if (m != dv) return out;
  auto coords = [&](const Vec& v) {
    Vec c(m);
    for (int j = 0; j < m; ++j) c[j] = v[M.pivots()[j]];
    return c;
  };
  auto module_matrix = [&](const std::function<Vec(const Vec&)>& act) {
    return matrix_of(m, m, [&](int j) { return coords(act(M.rows()[j])); });
  };
  auto rep_matrix = [&](const std::function<Vec(int, const Vec&)>& act) {
    // column (i, mu) is the image of mu in component i
    return matrix_of(dv, dv, [&](int col) {
      int i = col / dr, mu = col % dr;
      Vec out(dv, 0);
      for (int r = 0; r < rho.dim; ++r) {
        Vec img = act(r * rho.dim + i, unit_vector(dr, mu));
        for (int nu = 0; nu < dr; ++nu) out[r * dr + nu] = img[nu];
      }
      return out;
    });
  };
  std::vector<Vec> eqs;
  for (int s : rho.G->generators()) {
    const Vec& gs = alg.group_images()[s];
    Matrix A = module_matrix([&](const Vec& v) { return alg.mul(gs, v); });
    Matrix B = rep_matrix([&](int entry, const Vec& x) { return R.mul(rho.images[s][entry], x); });
    intertwining_equations(k, A, B, eqs);
  }
  for (int i = 0; i < R.nvars(); ++i) {
    auto x = R.variable(i);
    Matrix A = module_matrix([&](const Vec& v) { return alg.rscale(x, v); });
    Matrix B = rep_matrix([&](int entry, const Vec& y) {
      return entry % (rho.dim + 1) == 0 ? R.mul(x, y) : R.zero();
    });
    intertwining_equations(k, A, B, eqs);
  }
  auto sols = nullspace(k, eqs, dv * m);
  out.solution_dim = static_cast<int>(sols.size());
  auto try_matrix = [&](const Vec& flat) {
    Matrix F(dv, m);
    F.a = flat;
    if (inverse(k, F)) {
      out.found = true;
      out.intertwiner = F;
      return true;
    }
    return false;
  };
  for (const auto& s : sols)
    if (try_matrix(s)) return out;
  long long total = 1;
  for (size_t i = 0; i < sols.size() && total <= 4096; ++i) total *= k.size();
  if (sols.empty() || total > 4096) return out;
  for (long long code = 1; code < total; ++code) {
    Vec flat(static_cast<size_t>(dv) * m, 0);
    long long c = code;
    for (const auto& s : sols) {
      int coef = static_cast<int>(c % k.size());
      c /= k.size();
      if (coef) axpy(k, coef, s, flat);
    }
    if (try_matrix(flat)) return out;
  }
  return out;
}

CocycleData cocycle_extraction(const AssocAlgebra& alg, const GmaFrame& f, const GroupModel& m) {
  if (alg.ring().dim() != 1) throw std::invalid_argument("cocycle extraction works over the residue field");
  const Field& k = m.k;
  const FiniteGroup& G = *m.G;
  int n = G.order();
  CocycleData d;
  for (int g = 0; g < n; ++g) {
    auto a = frame_coordinates(alg, f, alg.group_images()[g]);
    d.c11.push_back(a[0][0]);
    d.c12.push_back(a[1][0]);
    d.c21.push_back(a[2][0]);
    d.c22.push_back(a[3][0]);
  }
  d.diagonal_ok = d.c11 == m.chi1 && d.c22 == m.chi2;
  d.c12_cocycle = !kernels::first_failing_pair(n, n, [&](int g, int h) {
                     return d.c12[G.mul(g, h)] == k.add(k.mul(m.chi1[g], d.c12[h]), k.mul(d.c12[g], m.chi2[h]));
                   }).found;
  d.c21_cocycle = !kernels::first_failing_pair(n, n, [&](int g, int h) {
                     return d.c21[G.mul(g, h)] == k.add(k.mul(d.c21[g], m.chi1[h]), k.mul(m.chi2[g], d.c21[h]));
                   }).found;
  Vec z12(n), z21(n);
  for (int g = 0; g < n; ++g) {
    z12[g] = k.div(d.c12[g], m.chi2[g]);
    z21[g] = k.div(d.c21[g], m.chi1[g]);
  }
  d.c12_nonsplit = !is_coboundary(m, twist(m, 2, 1), z12);
  d.c21_nonsplit = !is_coboundary(m, twist(m, 1, 2), z21);
  return d;
}

FreeRankReport free_rank_one_check(const AssocAlgebra& alg, const Vec& e, const TraceFn* t) {
  const Field& k = alg.field();
  const LocalRing& R = alg.ring();
  FreeRankReport r;
  if (is_zero(e)) {
    r.degenerate = true;
    return r;
  }
  std::vector<Vec> re;
  for (int mu = 0; mu < R.dim(); ++mu) re.push_back(alg.rbasis_scale(mu, e));
  r.faithful = rank(k, re, alg.dim()) == R.dim();
  std::vector<Vec> corner;
  for (int b = 0; b < alg.dim(); ++b) corner.push_back(alg.mul(alg.mul(e, alg.basis(b)), e));
  r.corner_is_scalar = same_span(k, corner, re, alg.dim());
  if (t) r.trace_unit = R.is_unit((*t)(e));
  r.rank = r.pass() ? 1 : 0;
  return r;
}

std::optional<int> free_rank(const AssocAlgebra& alg) {
  const LocalRing& R = alg.ring();
  if (alg.dim() % R.dim() != 0) return std::nullopt;
  int m = alg.dim() / R.dim();
  EchelonSpace mA(alg.field(), alg.dim());
  for (int i = 0; i < R.nvars(); ++i) {
    auto x = R.variable(i);
    for (int j = 0; j < alg.dim(); ++j) mA.add(alg.rscale(x, alg.basis(j)));
  }
  if (alg.dim() - mA.dim() != m) return std::nullopt;
  return m;
}

}  // namespace vk
