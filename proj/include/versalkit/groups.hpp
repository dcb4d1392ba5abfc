#pragma once

#include <memory>
#include <string>
#include <vector>

#include "versalkit/field.hpp"
#include "versalkit/kernels.hpp"
#include "versalkit/linalg.hpp"
#include "versalkit/local_ring.hpp"

namespace vk {

// Finite group given by its full multiplication table.
class FiniteGroup {
 public:
  // validates closure, identity, inverses and associativity
  static FiniteGroup from_table(std::vector<int> table, std::vector<std::string> names);
  static FiniteGroup cyclic(int n, const std::string& gen);
  static FiniteGroup abelian(const std::vector<int>& orders, const std::vector<std::string>& gens);
  // upper unitriangular 3x3 matrices over F_p, element a^i*b^j*c^l at index (i*p + j)*p + l, c = [a, b]
  static FiniteGroup heisenberg(int p, const std::vector<std::string>& gens);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }
  int pow(int a, long long e) const;
  int element_order(int a) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int a) const { return names_[a]; }
  int find(const std::string& name) const;

  // deterministic small generating set (greedy in element order)
  std::vector<int> generators() const;
  std::vector<int> closure(const std::vector<int>& gens) const;
  // class index per element; classes numbered by first element
  std::vector<int> conjugacy_classes(int* count = nullptr) const;
  bool is_subgroup(const std::vector<int>& s) const;
  bool is_normal(const std::vector<int>& s) const;

  // same group with elements listed in a different order: new index i is old perm[i]
  FiniteGroup permuted(const std::vector<int>& perm) const;

 private:
  FiniteGroup() = default;
  void finish();
  int n_ = 0;
  int id_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Semidirect {
  FiniteGroup G;
  std::vector<int> P;  // G-index of (p, 1) for each P element
  std::vector<int> H;  // G-index of (1, h) for each H element
  std::vector<int> p_part;  // P index of each G element
  std::vector<int> h_part;  // H index of each G element
};

// action[h] is a permutation of the elements of P; the product is
// (p1,h1)(p2,h2) = (p1 * action(h1)(p2), h1 h2)
Semidirect build_semidirect(const FiniteGroup& P, const FiniteGroup& H, const std::vector<std::vector<int>>& action);

// permutation of FiniteGroup::abelian(orders, ...) sending generator i to the
// element with exponent vector images[i]; throws unless it is an automorphism
std::vector<int> abelian_automorphism(const std::vector<int>& orders, const std::vector<std::vector<int>>& images);
// index of the element with the given exponents in FiniteGroup::abelian(orders, ...)
// a -> a^alpha, b -> b^beta, c -> c^(alpha beta)
std::vector<int> heisenberg_automorphism(int p, int alpha, int beta);
int abelian_index(const std::vector<int>& orders, const std::vector<int>& exps);
// extends automorphisms given on generators of H to all of H; throws when the
// images do not define a homomorphism H -> Aut(P)
std::vector<std::vector<int>> action_from_generators(const FiniteGroup& P, const FiniteGroup& H,
                                                     const std::vector<int>& hgens,
                                                     const std::vector<std::vector<int>>& perms);

// Finite group G = P x| H with two characters of H, extended to G.
struct GroupModel {
  std::string name;
  int p = 2;
  Field k = Field::prime(2);
  GroupPtr G;
  std::vector<int> P;
  std::vector<int> H;
  std::vector<int> h_part;  // G-index of the H-component of each element
  std::vector<int> chi1;    // values in k^x, indexed by G
  std::vector<int> chi2;
  std::vector<std::pair<std::string, int>> named;  // generator names
};

using ModelPtr = std::shared_ptr<const GroupModel>;

// chi values given on the elements of H (indexed like H's own table)
GroupModel make_model(std::string name, int p, const Field& k, const Semidirect& sd, const std::vector<int>& chi1_on_H,
                      const std::vector<int>& chi2_on_H);
// broken invariants, empty when valid; equality of the characters is reported
// by genericity_check and not here
std::vector<std::string> validate_model(const GroupModel& m);
int parse_word(const GroupModel& m, const std::string& word);

// psi = chi_j / chi_i
std::vector<int> twist(const GroupModel& m, int i, int j);

struct CocycleSpace {
  std::vector<int> psi;
  std::vector<Vec> cocycles;      // basis of Z^1(G, k(psi))
  std::vector<Vec> coboundaries;  // basis of B^1
  std::vector<Vec> normalized;    // basis of cocycles vanishing on H
  int h1() const { return static_cast<int>(cocycles.size() - coboundaries.size()); }
};

CocycleSpace cocycle_space(const GroupModel& m, const std::vector<int>& psi);
// dim H^1(G, k(chi_j / chi_i))
int ext_dimension(const GroupModel& m, int i, int j);
bool is_coboundary(const GroupModel& m, const std::vector<int>& psi, const Vec& c);

struct GenericityReport {
  bool pass = false;
  int ext[2][2] = {{0, 0}, {0, 0}};
  std::vector<std::string> reasons;
};
GenericityReport genericity_check(const GroupModel& m);

using RingMatrix = std::vector<Vec>;  // row-major square matrix of ring elements

struct MatrixRep {
  GroupPtr G;
  RingPtr R;
  int dim = 2;
  std::vector<RingMatrix> images;
};

RingMatrix rmat_identity(const LocalRing& R, int dim);
RingMatrix rmat_mul(const LocalRing& R, const RingMatrix& a, const RingMatrix& b, int dim);
bool rmat_equal(const RingMatrix& a, const RingMatrix& b);
Vec rmat_trace(const LocalRing& R, const RingMatrix& a, int dim);
Vec rmat_det2(const LocalRing& R, const RingMatrix& a);

kernels::Witness multiplicativity_failure(const MatrixRep& rho, kernels::Mode mode = kernels::Mode::Parallel);
// extends generator images to a homomorphism; throws when they do not define one
MatrixRep rep_from_generators(GroupPtr G, RingPtr R, int dim, const std::vector<int>& gens,
                              const std::vector<RingMatrix>& images);

// rho_1 (top = 1, upper triangular) or rho_2 (top = 2, lower triangular) over k
MatrixRep nonsplit_extension(const GroupModel& m, int top);

}  // namespace vk
