#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "versalkit/field.hpp"

namespace vk {

// Packed monomial: 12 variables, 5 bits of exponent each.
using Mono = std::uint64_t;
inline constexpr int kMaxVars = 12;
inline constexpr int kExpBits = 5;
inline constexpr int kMaxExp = (1 << kExpBits) - 1;

inline int mono_exp(Mono m, int i) { return static_cast<int>((m >> (kExpBits * i)) & kMaxExp); }
int mono_degree(Mono m);
Mono mono_from_exps(const std::vector<int>& e);
std::vector<int> mono_exps(Mono m, int nvars);
// throws when an exponent would overflow
Mono mono_mul(Mono a, Mono b);
bool mono_divides(Mono a, Mono b);
Mono mono_var(int i, int e = 1);
// degree first, then reverse lexicographic; true when a comes strictly before b
bool mono_less(Mono a, Mono b, int nvars);
std::string format_mono(Mono m, const std::vector<std::string>& vars);

// Sparse polynomial with coefficients in a field.
struct Poly {
  std::map<Mono, int> terms;

  bool is_zero() const { return terms.empty(); }
  int lowest_degree() const;
  int highest_degree() const;
  bool is_monomial() const { return terms.size() == 1; }
  bool operator==(const Poly& o) const = default;
};

Poly poly_add(const Field& k, const Poly& a, const Poly& b);
Poly poly_scale(const Field& k, int c, const Poly& a);
Poly poly_mul(const Field& k, const Poly& a, const Poly& b);
Poly poly_mono(Mono m, int c = 1);

// Parses sums of terms like "2*a*b^2 - x*y + 1"; factors are separated by '*'.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars, const Field& k);
std::string format_poly(const Poly& p, const std::vector<std::string>& vars, const Field& k);

}  // namespace vk
