#pragma once

#include <optional>
#include <vector>

#include "versalkit/algebra.hpp"
#include "versalkit/det_pair.hpp"

namespace vk {

// epsilon-components of a deformation of (chi1 + chi2, chi1 chi2) to k[e]
struct TangentVector {
  Vec t1;
  Vec d1;
};

struct TangentSpace {
  std::vector<TangentVector> basis;
  std::vector<Vec> hom_basis;  // Hom(G, k)
  int classes = 0;
  int dim() const { return static_cast<int>(basis.size()); }
};

RingPtr dual_numbers(const Field& k);
DeterminantPair pair_from_tangent(const GroupModel& m, const TangentVector& v, RingPtr D);
TangentVector tangent_of_pair(const GroupModel& m, const DeterminantPair& det);
Vec flatten(const TangentVector& v);
TangentVector tangent_add(const Field& k, const TangentVector& a, const TangentVector& b);

// t1 is a class function and d1 = d0 delta with delta in Hom(G, k); the
// remaining constraints are t1(1) = 0 and the epsilon-part of axiom (iii)
TangentSpace tangent_space(const GroupModel& m);

// multiplicative lift chi0 + e chi1 of a character to k[e]
struct CharacterLift {
  Vec chi0;
  Vec chi1;
};
bool is_multiplicative(const FiniteGroup& G, const Field& k, const CharacterLift& xi);
CharacterLift character_deformation(const Vec& chi, const Vec& phi, const Field& k);
TangentVector first_arrow(const FiniteGroup& G, const Field& k, const CharacterLift& xi1, const CharacterLift& xi2);
// images of (phi, 0) and (0, phi) for phi running over a basis of Hom(G, k)
std::vector<TangentVector> first_arrow_image(const GroupModel& m);

struct CharacterRecovery {
  CharacterLift xi1, xi2;
  bool mult1 = false;
  bool mult2 = false;
  bool ok() const { return mult1 && mult2; }
};
// xi_i(g) = t(e_i g) in CH(k[e])
CharacterRecovery character_recovery(const GroupModel& m, const DeterminantPair& det);

struct LastArrow {
  int lambda = 0;
  LocalRing::Elem c;
  bool lift_invariant = false;  // same lambda after rescaling the lifts by units 1 + e mu
  bool trace_route = false;     // t(e2 g e1 h e2) = e lambda c21(g) c12(h) for all g, h
  int psi1 = -1;
  int psi2 = -1;
};
LastArrow last_arrow(const GroupModel& m, const DeterminantPair& det);
// lambda from t(e2 g e1 h e2) = e lambda c21(g) c12(h) evaluated in k[e][G], no frame over k[e] needed;
// empty when the form is not a multiple of c21 x c12
std::optional<int> trace_lambda(const GroupModel& m, const DeterminantPair& det);

struct TeichReport {
  bool pass = true;
  std::vector<int> failing;  // elements of H where the restriction differs
};
TeichReport teichmuller_restriction(const DeterminantPair& det, const GroupModel& m);

struct Reducibility {
  bool split = false;
  RingPtr quotient;
  std::vector<LocalRing::Elem> psi1;
  std::vector<LocalRing::Elem> psi2;
  std::string reason;
};
// reduce det modulo the ideal J of A and look for t = psi1 + psi2, d = psi1 psi2
Reducibility reducibility_test(const DeterminantPair& det, const GroupModel& m, const std::vector<LocalRing::Elem>& J);
LocalRing::Elem map_to_quotient(const LocalRing& A, const LocalRing& B, const LocalRing::Elem& a);

struct ExactnessReport {
  int dim = 0;
  int ext[2][2] = {{0, 0}, {0, 0}};
  int image_dim = 0;
  int kernel_dim = 0;
  std::vector<int> lambdas;  // last arrow on the tangent basis
  int frame_failures = 0;    // basis vectors whose CH(k[e]) is not free, lambda taken from trace_lambda
  bool kernel_equals_image = false;
  bool sandwich = false;
  bool lambda_linear = false;
};
ExactnessReport tangent_exactness(const GroupModel& m);

}  // namespace vk
