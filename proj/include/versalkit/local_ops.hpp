#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "versalkit/det_pair.hpp"
#include "versalkit/groups.hpp"
#include "versalkit/local_ring.hpp"

namespace vk {

struct TruncationError : std::runtime_error {
  TruncationError(const std::string& what, int suggested) : std::runtime_error(what), suggested_N(suggested) {}
  int suggested_N;
};

struct HilbertSamuelData {
  std::vector<long long> lengths;  // l(A/m^{n+1}), 0 <= n < N
  int stable_from = -1;
  int dim = 0;
  long long mult = 0;
};

inline constexpr int kDefaultTruncation = 10;

// same ideal cut off at degree N
LocalRing retruncate(const LocalRing& R, int N);
// throws TruncationError when no window of dim + 2 agreeing differences exists
HilbertSamuelData hilbert_samuel(const LocalRing& R, int N = kDefaultTruncation);
HilbertSamuelData fit_lengths(const std::vector<long long>& lengths, int nvars);

struct AdjoinResult {
  RingPtr B;
  HilbertSamuelData hs_A, hs_B;
  bool dim_ok = false;
};
// A[[x, y]]/(xy - c)
AdjoinResult adjoin_xy_minus_c(const LocalRing& A, const LocalRing::Elem& c, int N = kDefaultTruncation,
                               const std::string& x = "x", const std::string& y = "y");

struct FreeOverZReport {
  bool pass = false;
  int checked_degree = -1;  // highest n with {a z^i, a z^i x} a basis of B/m^{n+1}
  int failure_degree = -1;
  std::string counterexample;
};
// z = x + y; {1, x} is a basis of B over the subring generated by A and z
FreeOverZReport free_over_z_check(const LocalRing& A, const LocalRing& B, const std::string& x = "x",
                                  const std::string& y = "y");

// monomial rings only: reduced iff the minimal generators are squarefree
bool is_reduced_monomial(const LocalRing& R);

struct VersalModel {
  RingPtr B;
  MatrixRep rho;
  LocalRing::Elem c;  // frame scalar, in A
  bool multiplicative = false;
  bool trace_det_ok = false;
  bool ch_identity = false;
  bool h_diagonal = false;
  std::string failure;
  bool pass() const { return multiplicative && trace_det_ok && ch_identity && h_diagonal; }
};
// e1 -> E11, phi12 -> y E12, phi21 -> x E21, e2 -> E22 over B = A[[x, y]]/(xy - c)
VersalModel versal_matrix_model(const GroupModel& m, const DeterminantPair& det, int N = kDefaultTruncation);

// rho composed with a ring map
MatrixRep push_forward(const MatrixRep& rho, const RingMap& f);
// rho modulo one variable of its ring
MatrixRep specialize_zero(const MatrixRep& rho, const std::string& var);
// diag(l, 1) rho diag(l, 1)^-1
MatrixRep conjugate_diag(const MatrixRep& rho, const LocalRing::Elem& l);

struct TriangularReport {
  bool triangular = false;
  bool diagonal_residual = false;  // diagonal reduces to (chi1, chi2)
  bool nonsplit = false;           // corner coefficient of the surviving variable is a nonsplit cocycle
  bool pass() const { return triangular && diagonal_residual && nonsplit; }
};
// upper = true checks the (2,1) entry vanishes and reads c12 from the y-coefficient of (1,2)
TriangularReport triangular_type(const GroupModel& m, const MatrixRep& rho, bool upper, const std::string& var);

struct LiftEquivalence {
  bool equivalent = false;
  std::optional<LocalRing::Elem> lambda;
  std::string reason;
};
// phi1(x) = l phi2(x), phi1(y) = l^-1 phi2(y) for some l in 1 + m, with equal images of the base variables
LiftEquivalence lift_equivalence(const RingMap& phi1, const RingMap& phi2, const std::string& x = "x",
                                 const std::string& y = "y");

// every element of the ring with residue 1, in coordinate order
std::vector<LocalRing::Elem> principal_units(const LocalRing& R);

}  // namespace vk
