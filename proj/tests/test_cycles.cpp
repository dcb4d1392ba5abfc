#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "versalkit/cycles.hpp"
#include "versalkit/io.hpp"

using namespace vk;

namespace {

std::vector<std::string> random_gens(std::mt19937& rng, const std::vector<std::string>& vars, int maxexp = 2) {
  std::vector<std::string> gens;
  int ngens = 1 + static_cast<int>(rng() % 3);
  for (int g = 0; g < ngens; ++g) {
    std::string s;
    for (const auto& v : vars) {
      int e = static_cast<int>(rng() % (maxexp + 1));
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += v + "^" + std::to_string(e);
    }
    gens.push_back(s.empty() ? vars[0] : s);
  }
  return gens;
}

// inclusion-minimal variable sets meeting every generator
std::vector<std::vector<int>> brute_minimal_primes(const MonomialQuotient& A) {
  int n = A.nvars();
  std::vector<int> covers;
  for (int S = 0; S < (1 << n); ++S) {
    bool ok = true;
    for (Mono g : A.gens) {
      bool hit = false;
      for (int i = 0; i < n; ++i) hit = hit || ((S >> i & 1) && mono_exp(g, i) > 0);
      ok = ok && hit;
    }
    if (ok) covers.push_back(S);
  }
  std::vector<std::vector<int>> out;
  for (int S : covers) {
    bool minimal = true;
    for (int T : covers) minimal = minimal && !(T != S && (T & S) == T);
    if (!minimal) continue;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (S >> i & 1) idx.push_back(i);
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// primary ideal for each term, intersected
MonomialQuotient realize(const Cycle& c) {
  std::optional<MonomialQuotient> out;
  for (const auto& P : c.support()) {
    long long m = c.terms.at(P.vars);
    std::vector<std::string> gens;
    for (size_t i = 0; i < P.vars.size(); ++i)
      gens.push_back(c.ambient[P.vars[i]] + (i == 0 ? "^" + std::to_string(m) : ""));
    MonomialQuotient Q = MonomialQuotient::parse(c.ambient, gens);
    out = out ? intersect(*out, Q) : Q;
  }
  return out ? *out : MonomialQuotient::parse(c.ambient, {"1"});
}

}  // namespace

TEST_CASE("minimal primes agree with the exhaustive transversal search") {
  std::mt19937 rng(11);
  std::vector<std::string> vars = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 60; ++trial) {
    MonomialQuotient A = MonomialQuotient::parse(vars, random_gens(rng, vars));
    std::vector<std::vector<int>> got;
    for (const auto& P : minimal_primes(A)) got.push_back(P.vars);
    std::sort(got.begin(), got.end());
    CHECK(got == brute_minimal_primes(A));
  }
}

TEST_CASE("cycles of hand-counted monomial quotients") {
  auto A = MonomialQuotient::parse({"x", "y"}, {"x^2*y"});
  CHECK(cycle_of(A, 1).format() == "2[(x)] + [(y)]");
  auto B = MonomialQuotient::parse({"x", "y", "z"}, {"x^2*y", "x*z"});
  auto mp = minimal_primes(B);
  REQUIRE(mp.size() == 2);
  CHECK(mp[0].format() == "(x)");
  CHECK(mp[1].format() == "(y,z)");
  CHECK(cycle_of(B, 2).format() == "[(x)]");
  CHECK(cycle_of(B, 1).format() == "[(y,z)]");
  auto C = MonomialQuotient::parse({"x", "y"}, {"x^2*y", "x^3"});
  CHECK(local_length(C, PrimeLabel::of(C.vars, {"x"})) == 2);
  CHECK_THROWS_AS(local_length(C, PrimeLabel::of(C.vars, {"x", "y"})), std::invalid_argument);
  CHECK(cycle_of(MonomialQuotient::parse({"x", "y"}, {"x*y"}), 0).is_zero());
}

TEST_CASE("local lengths agree with Hilbert-Samuel multiplicities at the prime") {
  std::mt19937 rng(5);
  std::vector<std::string> vars = {"a", "b", "c"};
  Field k = Field::prime(2);
  for (int trial = 0; trial < 25; ++trial) {
    MonomialQuotient A = MonomialQuotient::parse(vars, random_gens(rng, vars));
    LocalRing R = A.to_ring(k, 10);
    for (const auto& P : minimal_primes(A)) {
      CAPTURE(A.format_ideal());
      CAPTURE(P.format());
      CHECK(local_length(A, P) == local_length_general(R, P.names(), 10));
    }
  }
}

TEST_CASE("alpha keeps per-label multiplicities, checked through Hilbert-Samuel") {
  std::vector<std::string> amb = {"a", "b"};
  Cycle c1 = io::parse_cycle("2[(a)] + [(b)]", amb, 1);
  Cycle c2 = io::parse_cycle("3[(b)]", amb, 1);
  Cycle img = alpha(c1, c2);
  CHECK(img.format() == "2[(a,x)] + [(b,x)] + 3[(b,y)]");
  CHECK(multiplicity_total(img) == multiplicity_total(c1) + multiplicity_total(c2));
  Field k = Field::prime(2);
  MonomialQuotient R = realize(img);
  CHECK(cycle_of(R, img.dim) == img);
  LocalRing ring = R.to_ring(k, 10);
  for (const auto& P : img.support()) CHECK(local_length_general(ring, P.names(), 10) == img.terms.at(P.vars));
  HilbertSamuelData h = hilbert_samuel(ring, 10);
  CHECK(h.dim == img.dim);
  CHECK(h.mult == multiplicity_total(img));
}

TEST_CASE("alpha is injective on small cycles") {
  std::vector<std::string> amb = {"a", "b"};
  std::vector<Cycle> cycles;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Cycle c{amb, 1, {}};
      c.add(PrimeLabel::of(amb, {"a"}), i);
      c.add(PrimeLabel::of(amb, {"b"}), j);
      cycles.push_back(c);
    }
  std::vector<std::string> seen;
  for (const auto& c1 : cycles)
    for (const auto& c2 : cycles) {
      std::string s = alpha(c1, c2).format();
      CHECK(std::find(seen.begin(), seen.end(), s) == seen.end());
      seen.push_back(s);
    }
  CHECK(seen.size() == 81);
}

TEST_CASE("additivity holds exactly under the disjointness hypothesis") {
  std::mt19937 rng(3);
  std::vector<std::string> vars = {"a", "b", "c"};
  int violations = 0, tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto I1 = MonomialQuotient::parse(vars, random_gens(rng, vars));
    auto I2 = MonomialQuotient::parse(vars, random_gens(rng, vars));
    for (int d = 0; d < 3; ++d) {
      AdditivityReport r = additivity_check(I1, I2, std::nullopt, d);
      CHECK(r.pass() == r.hypothesis);
      CHECK(r.violations.empty() == r.hypothesis);
      violations += !r.hypothesis;
      ++tested;
    }
  }
  CHECK(violations > 0);
  CHECK(violations < tested);
  AdditivityReport r = additivity_check(MonomialQuotient::parse({"x", "y"}, {"x"}),
                                        MonomialQuotient::parse({"x", "y"}, {"x^2"}), std::nullopt, 1);
  CHECK_FALSE(r.pass());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].find("(x)") != std::string::npos);
}

TEST_CASE("cutting by a regular variable adds it to every component") {
  std::mt19937 rng(17);
  std::vector<std::string> base = {"a", "b", "c"};
  std::vector<std::string> vars = {"a", "b", "c", "t"};
  for (int trial = 0; trial < 30; ++trial) {
    MonomialQuotient A = MonomialQuotient::parse(vars, random_gens(rng, base));
    REQUIRE(is_regular_variable(A, "t"));
    for (int d = 1; d <= 3; ++d) {
      Cycle z = cycle_of(A, d);
      Cycle expect{vars, d - 1, {}};
      for (const auto& P : z.support()) {
        auto names = P.names();
        names.push_back("t");
        expect.add(PrimeLabel::of(vars, names), z.terms.at(P.vars));
      }
      CHECK(cut_by_regular(A, "t", d) == expect);
    }
  }
  CHECK_FALSE(is_regular_variable(MonomialQuotient::parse({"x", "y"}, {"x*y"}), "x"));
  CHECK_THROWS_AS(cut_by_regular(MonomialQuotient::parse({"x", "y"}, {"x*y"}), "x", 1), std::invalid_argument);
}

TEST_CASE("the symmetric scenario satisfies the cycle identity and a perturbed one does not") {
  BmScenario s;
  s.base = {"a", "b"};
  s.relations = {"x*y"};
  s.locus1 = std::vector<std::string>{"x", "a"};
  s.locus2 = std::vector<std::string>{"y", "b"};
  s.r1 = {"a"};
  s.r2 = {"b"};
  s.d = 3;
  BmReport r = bm_cycle_identity(s);
  CHECK(r.pass());
  CHECK(r.e_lhs == 2);
  CHECK(r.e_rhs == 2);
  s.r1 = {"a^2"};
  BmReport q = bm_cycle_identity(s);
  CHECK_FALSE(q.pass());
  CHECK_FALSE(q.diff.equal);
  REQUIRE(q.diff.entries.size() == 1);
  CHECK(std::get<0>(q.diff.entries[0]) == "(a,x)");
  s.locus1 = std::vector<std::string>{"a"};
  CHECK_FALSE(bm_cycle_identity(s).shape_ok);
}

TEST_CASE("control cycle instances") {
  for (const auto* file : {"rings/control_ab.ini", "rings/control_a2b.ini"}) {
    CAPTURE(file);
    io::RingSpec s = io::load_ring(fixture(file));
    ControlCycleReport r = control_cycle_check(s.ring, *s.control_prime, s.ring.parse(s.control_c));
    CHECK(r.pass());
    CHECK(r.e_Ap == r.e_Bq);
    CHECK(r.len_Ap == r.len_Bq);
  }
  io::RingSpec s = io::load_ring(fixture("rings/control_a2b.ini"));
  ControlCycleReport r = control_cycle_check(s.ring, *s.control_prime, s.ring.parse(s.control_c));
  CHECK(r.len_Ap == 2);
  CHECK(r.dim_Bq == r.dim_A + 1);
}

TEST_CASE("cycle text round-trips") {
  std::vector<std::string> amb = {"a", "b", "x"};
  for (const auto* t : {"2[(a)] + [(b)]", "[(x)]", "0", "-[(a)] + 3[(x)]"}) {
    Cycle c = io::parse_cycle(t, amb, 2);
    CHECK(io::parse_cycle(c.format(), amb, 2) == c);
  }
  CHECK_THROWS(io::parse_cycle("2[(a,b)]", amb, 2));
  CHECK_THROWS(io::parse_cycle("[(q)]", amb, 2));
  CHECK_THROWS(io::parse_cycle("[(a)] +", amb, 2));
}
