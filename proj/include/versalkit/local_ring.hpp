#pragma once

#include <memory>
#include <string>
#include <vector>

#include "versalkit/linalg.hpp"
#include "versalkit/poly.hpp"

namespace vk {

// Finite-dimensional local k-algebra k[vars]/(I + m^N). Elements are
// coordinate vectors on the standard monomials (the monomials below degree N
// that are not lowest terms of the ideal, under degree-then-revlex order).
//
// An artinian ring is one whose ideal already contains m^N; a truncated ring
// is a model of a power-series quotient cut off at degree N.
class LocalRing {
 public:
  using Elem = Vec;

  static LocalRing residue_field(const Field& k);
  // monomial ideal containing a pure power of every variable; N is chosen so
  // that the truncation changes nothing
  static LocalRing artinian(const Field& k, std::vector<std::string> vars, std::vector<Poly> monomial_gens);
  static LocalRing truncated(const Field& k, std::vector<std::string> vars, std::vector<Poly> gens, int N);

  LocalRing with_generators(const std::vector<Poly>& extra) const;
  LocalRing quotient(const std::vector<Elem>& extra) const;
  // same ideal, with fresh variables appended
  LocalRing adjoin_variables(const std::vector<std::string>& names, const std::vector<Poly>& extra, int N) const;

  const Field& field() const { return k_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int variable_index(const std::string& name) const;
  int truncation() const { return N_; }
  bool exact() const { return exact_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_monomial() const;

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Mono>& basis() const { return basis_; }
  int basis_degree(int i) const { return mono_degree(basis_[i]); }
  std::string basis_label(int i) const { return format_mono(basis_[i], vars_); }

  Elem zero() const { return Elem(dim(), 0); }
  Elem one() const;
  Elem scalar(int c) const;
  Elem variable(int i) const;
  Elem from_poly(const Poly& p) const;
  Elem parse(const std::string& text) const;
  Poly to_poly(const Elem& x) const;
  // remainder modulo the ideal; overflow reports dropped terms of degree >= N
  Poly normal_form(const Poly& p, bool* overflow = nullptr) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(int c, const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, int e) const;
  bool is_zero(const Elem& a) const { return vk::is_zero(a); }
  int residue(const Elem& a) const { return a.empty() ? 0 : a[0]; }
  bool in_max_ideal(const Elem& a) const { return residue(a) == 0; }
  bool is_unit(const Elem& a) const { return residue(a) != 0; }
  Elem inverse(const Elem& a) const;
  // coefficient of a basis monomial given by exponent string, e.g. "e"
  int coefficient(const Elem& a, Mono m) const;

  // l(A/m^{n+1}) for 0 <= n < N
  std::vector<long long> hilbert_lengths() const;
  std::string format(const Elem& a) const;
  // coefficient list on the standard monomials, for exact serialization
  std::vector<std::string> basis_labels() const;

 private:
  struct Table;
  LocalRing() = default;
  void build();
  const std::vector<std::vector<std::pair<int, int>>>& table() const;

  Field k_ = Field::prime(2);
  std::vector<std::string> vars_;
  std::vector<Poly> gens_;
  int N_ = 1;
  bool exact_ = true;

  std::vector<Mono> mono_gens_;
  std::vector<Mono> alive_;  // sorted, not in the monomial part of the ideal
  std::vector<int> pivot_row_;  // per alive index, -1 if not a pivot
  std::vector<std::vector<std::pair<int, int>>> rows_;
  std::vector<Mono> basis_;
  std::vector<int> alive_to_basis_;
  std::shared_ptr<Table> table_;
};

using RingPtr = std::shared_ptr<const LocalRing>;

// k-algebra map given by images of the source variables.
class RingMap {
 public:
  RingMap(RingPtr src, RingPtr dst, std::vector<Vec> images);
  Vec apply(const Vec& x) const;
  // images lie in the maximal ideal, generators map to zero, truncation compatible
  bool well_defined(std::string* why = nullptr) const;
  const RingPtr& source() const { return src_; }
  const RingPtr& target() const { return dst_; }
  const std::vector<Vec>& images() const { return images_; }

 private:
  Vec apply_poly(const Poly& p) const;
  RingPtr src_;
  RingPtr dst_;
  std::vector<Vec> images_;
  std::vector<Vec> basis_images_;
};

// Map between rings sharing variable names: each source variable goes to the
// target variable of the same name, or to zero if absent.
RingMap inclusion_by_name(RingPtr src, RingPtr dst);

}  // namespace vk
