#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "versalkit/cycles.hpp"

namespace vk {

// Z[X]/(Phi_n(X)); elements are coefficient vectors of length phi(n)
class Cyclotomic {
 public:
  using Elem = std::vector<long long>;
  explicit Cyclotomic(int n);

  int order() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const std::vector<long long>& modulus() const { return phi_; }

  Elem zero() const { return Elem(degree(), 0); }
  Elem integer(long long c) const;
  // X^e for any integer e
  Elem root(long long e) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem scale(long long c, const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  std::optional<long long> as_integer(const Elem& a) const;
  // in Z[X^step] after reduction, i.e. fixed by the Galois elements fixing X^step
  bool in_subring(const Elem& a, int step) const;
  std::string format(const Elem& a) const;

 private:
  int n_;
  std::vector<long long> phi_;
  std::vector<Elem> powers_;  // X^e mod Phi_n for 0 <= e < n
};

std::vector<long long> cyclotomic_polynomial(int n);

struct SerreWeight {
  int r = 0;
  int s = 0;
  auto operator<=>(const SerreWeight&) const = default;
  std::string format() const { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }
};

enum class ClassKind { Central, Split, Nonsplit };

// p-regular class with eigenvalue exponents (i, j) of a fixed generator of F_{p^2}^x
struct RegularClass {
  ClassKind kind;
  int i = 0;
  int j = 0;
  std::string label;
};

// rejects composite p
std::vector<RegularClass> pregular_classes(int p);

struct BrauerCharacter {
  int p = 2;
  std::vector<Cyclotomic::Elem> values;  // indexed like pregular_classes(p)
  bool operator==(const BrauerCharacter&) const = default;
};

class BrauerTable {
 public:
  explicit BrauerTable(int p);
  int p() const { return p_; }
  const Cyclotomic& ring() const { return ring_; }
  const std::vector<RegularClass>& classes() const { return classes_; }
  // index of the identity class
  int identity() const { return 0; }
  // class of diag(g0, g0) for the generator g0 of F_p^x
  int central_generator() const;

  BrauerCharacter sym(int m, int a) const;
  BrauerCharacter det_power(int a) const;
  BrauerCharacter steinberg() const;
  // Ind from the Borel of the character diag(u, v) -> w^k1(u) w^k2(v)
  BrauerCharacter principal_series(int k1, int k2) const;
  BrauerCharacter product(const BrauerCharacter& a, const BrauerCharacter& b) const;
  BrauerCharacter sum(const BrauerCharacter& a, const BrauerCharacter& b) const;
  std::optional<long long> dimension(const BrauerCharacter& f) const;
  // e with f(z) = f(1) zeta_{p-1}^e on the central generator, if f is central-isotypic
  std::optional<int> central_exponent(const BrauerCharacter& f) const;

 private:
  int p_;
  Cyclotomic ring_;
  std::vector<RegularClass> classes_;
};

struct InertialType {
  enum Kind { TrivialSplit, ScalarSteinberg, TamePrincipal } kind = TrivialSplit;
  int k1 = 0;  // chi = teichmuller^k1
  int k2 = 0;
  static InertialType parse(const std::string& text);
  std::string format() const;
};

struct HodgeType {
  int a = 0;
  int b = 1;
  InertialType tau;
};

BrauerCharacter brauer_char_sym(const BrauerTable& t, int m, int a);
// sigma(tau); rejects cuspidal descriptors at parse time
BrauerCharacter brauer_char_type(const BrauerTable& t, const InertialType& tau);
// sigma^cr(tau): chi o det for scalar types, sigma(tau) otherwise
BrauerCharacter brauer_char_type_cr(const BrauerTable& t, const InertialType& tau);

using MultiplicityTable = std::map<SerreWeight, long long>;

struct NotBrauerCharacter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Decomposition {
  MultiplicityTable m;
  bool central_filtered = false;  // solved inside the central-character block only
  int central_exponent = -1;
};
// throws NotBrauerCharacter with the residual when the solution is not a nonnegative integer vector
Decomposition decompose(const BrauerTable& t, const BrauerCharacter& f);
long long dimension_sum(const MultiplicityTable& m);

HodgeType weight_of_sigma(const SerreWeight& w);
// sigma(w, tau) or sigma^cr(w, tau)
BrauerCharacter sigma_character(const BrauerTable& t, const HodgeType& w, bool crystalline);

struct LedgerReport {
  MultiplicityTable m;
  Cycle rhs;
  long long e_total = 0;
  std::optional<CycleDiff> diff;  // against a claimed cycle
  bool pass() const { return !diff || diff->equal; }
};
// C1, C2 hold cycles of one common dimension over one base ambient
LedgerReport ledger(const BrauerTable& t, const HodgeType& w, bool crystalline,
                    const std::map<SerreWeight, Cycle>& C1, const std::map<SerreWeight, Cycle>& C2,
                    const std::optional<Cycle>& claimed = std::nullopt);

}  // namespace vk
