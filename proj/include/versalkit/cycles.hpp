#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "versalkit/local_ops.hpp"
#include "versalkit/local_ring.hpp"

namespace vk {

// k[vars]/I with I generated by monomials; no generators means I = 0, a
// generator 1 means I is the unit ideal
struct MonomialQuotient {
  std::vector<std::string> vars;
  std::vector<Mono> gens;

  static MonomialQuotient parse(const std::vector<std::string>& vars, const std::vector<std::string>& gens);
  static MonomialQuotient from_ring(const LocalRing& R);
  int nvars() const { return static_cast<int>(vars.size()); }
  bool is_unit_ideal() const;
  // same ideal with extra generators / in a larger ambient (variables matched by name)
  MonomialQuotient with(const std::vector<Mono>& extra) const;
  MonomialQuotient embedded(const std::vector<std::string>& ambient) const;
  LocalRing to_ring(const Field& k, int N) const;
  std::string format_ideal() const;
};

// sorted subset of the ambient variables, as indices
struct PrimeLabel {
  std::vector<std::string> ambient;
  std::vector<int> vars;

  static PrimeLabel of(const std::vector<std::string>& ambient, const std::vector<std::string>& names);
  int dim() const { return static_cast<int>(ambient.size() - vars.size()); }
  std::vector<std::string> names() const;
  std::string format() const;
  bool operator<(const PrimeLabel& o) const { return vars < o.vars; }
  bool operator==(const PrimeLabel& o) const { return ambient == o.ambient && vars == o.vars; }
};

struct Cycle {
  std::vector<std::string> ambient;
  int dim = 0;
  std::map<std::vector<int>, long long> terms;  // prime variable indices -> multiplicity, zeros dropped

  void add(const PrimeLabel& p, long long mult);
  Cycle operator+(const Cycle& o) const;
  bool operator==(const Cycle& o) const { return ambient == o.ambient && dim == o.dim && terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
  std::vector<PrimeLabel> support() const;
  std::string format() const;
};

struct CycleDiff {
  bool equal = true;
  // (prime, lhs multiplicity, rhs multiplicity) where they differ
  std::vector<std::tuple<std::string, long long, long long>> entries;
};
CycleDiff diff_cycles(const Cycle& lhs, const Cycle& rhs);

std::vector<PrimeLabel> minimal_primes(const MonomialQuotient& A);
// throws invalid_argument when P is not minimal over the ideal
long long local_length(const MonomialQuotient& A, const PrimeLabel& P);
Cycle cycle_of(const MonomialQuotient& A, int d);

// p1 -> (p1, x), p2 -> (p2, y) in the ambient enlarged by x, y
Cycle alpha(const Cycle& c1, const Cycle& c2, const std::string& x = "x", const std::string& y = "y");
// e(k[ambient]/P) summed with multiplicities; every coordinate prime quotient has e = 1
long long multiplicity_total(const Cycle& c);

struct AdditivityReport {
  bool hypothesis = true;
  bool additive = false;
  std::vector<std::string> violations;  // primes supporting two of the summands
  Cycle lhs, rhs;
  bool pass() const { return hypothesis && additive; }
};
// z_d(A/(I1 n I2 n I3)) against the sum; a missing I3 contributes nothing
AdditivityReport additivity_check(const MonomialQuotient& I1, const MonomialQuotient& I2,
                                  const std::optional<MonomialQuotient>& I3, int d);
MonomialQuotient intersect(const MonomialQuotient& a, const MonomialQuotient& b);

// exact test I : v = I
bool is_regular_variable(const MonomialQuotient& A, const std::string& v);
// z_{d-1}(A/(v)) in the same ambient; throws invalid_argument when v is a zerodivisor
Cycle cut_by_regular(const MonomialQuotient& A, const std::string& v, int d);

struct BmScenario {
  std::vector<std::string> base;  // variables of the pseudo-deformation model
  std::string x = "x", y = "y";
  std::vector<std::string> relations;  // extra generators of the versal model, e.g. x*y
  std::optional<std::vector<std::string>> locus1, locus2, locus_irr;
  std::vector<std::string> r1, r2;  // ideals of the R_1 / R_2 models in the base variables
  int d = 0;                        // dimension of the characteristic zero versal ring
};

struct BmReport {
  bool shape_ok = false;
  std::vector<std::string> shape_errors;
  Cycle lhs, rhs;
  CycleDiff diff;
  long long e_lhs = 0, e_rhs = 0;
  bool pass() const { return shape_ok && diff.equal && e_lhs == e_rhs; }
};
BmReport bm_cycle_identity(const BmScenario& s);

// length of the localization at a coordinate prime, by setting the variables
// outside P to 1 and taking the Hilbert-Samuel multiplicity at the origin
long long local_length_general(const LocalRing& R, const std::vector<std::string>& prime, int N = kDefaultTruncation);

struct ControlCycleReport {
  bool hypothesis = false;  // dim A/p = dim A
  bool c_in_p = false;
  int dim_A = 0, dim_Bq = 0;
  long long e_Ap = 0, e_Bq = 0;
  long long len_Ap = 0, len_Bq = 0;
  bool pass() const { return hypothesis && c_in_p && dim_Bq == dim_A + 1 && e_Ap == e_Bq && len_Ap == len_Bq; }
};
ControlCycleReport control_cycle_check(const LocalRing& A, const std::vector<std::string>& p, const LocalRing::Elem& c,
                                       int N = kDefaultTruncation);

}  // namespace vk
