#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "versalkit/det_pair.hpp"
#include "versalkit/groups.hpp"
#include "versalkit/linalg.hpp"
#include "versalkit/local_ring.hpp"

namespace vk {

using SparseVec = std::vector<std::pair<int, int>>;

// Associative R-algebra, finite-dimensional over the residue field k of R.
// Elements are coordinate vectors on a k-basis. Group algebras multiply by
// convolution; every other algebra carries a table of basis products.
class AssocAlgebra {
 public:
  using Elem = Vec;

  // table[i * n + j] = e_i e_j; ring_action[mu][j] = (basis monomial mu of R) . e_j
  AssocAlgebra(RingPtr R, int n, std::vector<SparseVec> table, std::vector<std::vector<SparseVec>> ring_action,
               Vec unit, std::vector<std::string> labels);
  static AssocAlgebra group_algebra(GroupPtr G, RingPtr R);
  // n x n matrices over R with k-basis (i, j, mu)
  static AssocAlgebra matrix_algebra(RingPtr R, int n);

  const LocalRing& ring() const { return *R_; }
  RingPtr ring_ptr() const { return R_; }
  const Field& field() const { return R_->field(); }
  int dim() const { return n_; }
  bool is_group_algebra() const { return group_kind_; }

  Elem zero() const { return Elem(n_, 0); }
  Elem basis(int i) const { return unit_vector(n_, i); }
  const Elem& unit() const { return unit_; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem scale(int c, const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  // r . a for r in R
  Elem rscale(const LocalRing::Elem& r, const Elem& a) const;
  // multiplication by the basis monomial mu of R
  Elem rbasis_scale(int mu, const Elem& a) const;

  // generators as an R-algebra; empty means the whole basis
  const std::vector<Elem>& generators() const { return gens_; }
  void set_generators(std::vector<Elem> g) { gens_ = std::move(g); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string format(const Elem& a) const;

  // images of group elements, when the algebra is a quotient of a group algebra
  GroupPtr group() const { return G_; }
  const std::vector<Elem>& group_images() const { return gimg_; }
  void set_group_images(GroupPtr G, std::vector<Elem> images);

  kernels::Witness associativity_failure(kernels::Mode mode = kernels::Mode::Parallel) const;
  bool unit_law() const;

 private:
  RingPtr R_;
  int n_ = 0;
  bool group_kind_ = false;
  std::vector<SparseVec> table_;
  std::vector<std::vector<SparseVec>> ract_;
  Elem unit_;
  std::vector<Elem> gens_;
  std::vector<std::string> labels_;
  GroupPtr G_;
  std::vector<Elem> gimg_;
};

// Least two-sided ideal containing gens and stable under R. With all_basis the
// multipliers are all basis elements, otherwise the algebra generators.
EchelonSpace ideal_closure(const AssocAlgebra& alg, const std::vector<Vec>& gens, bool all_basis = false);

struct QuotientAlgebra {
  AssocAlgebra alg;
  std::vector<int> complement;  // parent basis indices kept as the quotient basis
  std::shared_ptr<const EchelonSpace> ideal;
  int parent_dim = 0;

  Vec project(const Vec& parent_elem) const;
  Vec lift(const Vec& q) const;
};

QuotientAlgebra quotient_algebra(const AssocAlgebra& parent, const EchelonSpace& ideal);

// R-linear map on the algebra, given by its values on the k-basis
using TraceFn = std::function<LocalRing::Elem(const Vec&)>;

struct ChAlgebra {
  std::shared_ptr<const AssocAlgebra> group_alg;
  QuotientAlgebra q;
  DeterminantPair det;
  std::vector<LocalRing::Elem> trace_on_basis;

  const AssocAlgebra& alg() const { return q.alg; }
  const Vec& image(int g) const { return q.alg.group_images()[g]; }
  LocalRing::Elem trace(const Vec& a) const;
  TraceFn trace_fn() const;
};

// CH(A) = A[G] / <g^2 - t(g) g + d(g)>; throws when det fails validation
ChAlgebra ch_quotient(std::shared_ptr<const AssocAlgebra> group_alg, const DeterminantPair& det);
Vec cayley_hamilton_element(const AssocAlgebra& group_alg, const DeterminantPair& det, int g);

// (1/|H|) sum [chi](h) h^-1; chi holds k-values indexed by G
Vec character_idempotent(const AssocAlgebra& alg, const std::vector<int>& H, const std::vector<int>& chi);

struct Peirce {
  std::array<std::array<std::vector<Vec>, 2>, 2> block;  // k-bases of e_i A e_j
  bool complete = false;                                  // dimensions add up to dim A
  int dim(int i, int j) const { return static_cast<int>(block[i][j].size()); }
};

bool is_idempotent(const AssocAlgebra& alg, const Vec& e);
// throws unless e1, e2 are orthogonal idempotents with e1 + e2 = 1
Peirce peirce_decomposition(const AssocAlgebra& alg, const Vec& e1, const Vec& e2);

struct GmaFrame {
  Vec e1, e2, phi12, phi21;
  LocalRing::Elem c;
  int psi1 = -1;  // group element (or basis index) whose image was cut down to phi12
  int psi2 = -1;
  bool psi_from_group = true;
  std::vector<std::pair<std::string, bool>> relations;
  bool relations_hold() const;
};

struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// throws FrameError when an off-diagonal block is not free of rank 1 or the
// two scalars c disagree
GmaFrame gma_frame(const AssocAlgebra& alg, const Vec& e1, const Vec& e2, const TraceFn& t);
// (a11, a12, a21, a22) with a = a11 e1 + a12 phi12 + a21 phi21 + a22 e2
std::array<LocalRing::Elem, 4> frame_coordinates(const AssocAlgebra& alg, const GmaFrame& f, const Vec& a);
// r with target = r . x, if any
std::optional<LocalRing::Elem> solve_scalar(const AssocAlgebra& alg, const Vec& x, const Vec& target);

// k-basis of the centre, from the commutation equations with every basis element
std::vector<Vec> centre(const AssocAlgebra& alg);
// k-basis of {a1 e1 + a2 e2 : c (a1 - a2) = 0}
std::vector<Vec> gma_centre(const AssocAlgebra& alg, const GmaFrame& f);

struct EndReport {
  int end_dim = 0;       // k-dimension of the endomorphisms of the left regular module
  int right_mult_dim = 0;
  bool match = false;    // End equals the span of right multiplications
  bool anti_mult = false;
};
EndReport opposite_endo_check(const AssocAlgebra& alg);

struct InvolutionReport {
  bool ideal_stable = false;  // iota(J) inside J
  bool anti_mult = false;
  bool square_identity = false;
  std::vector<Vec> images;  // iota of each quotient basis element
  bool pass() const { return ideal_stable && anti_mult && square_identity; }
};
InvolutionReport ch_involution(const ChAlgebra& ch);
Vec apply_involution(const AssocAlgebra& alg, const InvolutionReport& inv, const Vec& a);

struct ModuleIso {
  bool found = false;
  int solution_dim = 0;
  Matrix intertwiner;  // k-matrix from a basis of alg.e to the k-basis (i, mu) of rho
};
// the left module alg.e against rho, through the group images
ModuleIso block_module_compare(const AssocAlgebra& alg, const Vec& e, const MatrixRep& rho);

struct CocycleData {
  std::vector<int> c11, c12, c21, c22;
  bool diagonal_ok = false;
  bool c12_cocycle = false;
  bool c21_cocycle = false;
  bool c12_nonsplit = false;
  bool c21_nonsplit = false;
  bool pass() const { return diagonal_ok && c12_cocycle && c21_cocycle && c12_nonsplit && c21_nonsplit; }
};
CocycleData cocycle_extraction(const AssocAlgebra& alg, const GmaFrame& f, const GroupModel& m);

struct FreeRankReport {
  int rank = 0;
  bool degenerate = false;  // e = 0
  bool corner_is_scalar = false;  // e A e = R e
  bool faithful = false;          // r e = 0 forces r = 0
  bool trace_unit = false;
  bool pass() const { return !degenerate && corner_is_scalar && faithful; }
};
FreeRankReport free_rank_one_check(const AssocAlgebra& alg, const Vec& e, const TraceFn* t = nullptr);
// rank m when the algebra is free of rank m over R
std::optional<int> free_rank(const AssocAlgebra& alg);

}  // namespace vk
