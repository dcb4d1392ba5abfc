#include "doctest.h"
#include "support/composition_series.hpp"
#include "versalkit/weights.hpp"

using namespace vk;

namespace {

oracle::Module tensor(const Field& k, const oracle::Module& A, const oracle::Module& B) {
  oracle::Module out;
  out.dim = A.dim * B.dim;
  for (size_t g = 0; g < A.gens.size(); ++g) {
    Matrix M(out.dim, out.dim);
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j)
        for (int u = 0; u < B.dim; ++u)
          for (int v = 0; v < B.dim; ++v)
            M(i * B.dim + u, j * B.dim + v) = k.mul(A.gens[g](i, j), B.gens[g](u, v));
    out.gens.push_back(M);
  }
  return out;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<long long>{1, 0, 0, 0, 1});
  for (int n : {1, 2, 3, 4, 6, 8, 12, 24}) {
    Cyclotomic R(n);
    CHECK(R.as_integer(R.root(n)) == 1);
    CHECK(R.as_integer(R.mul(R.root(5), R.root(-5))) == 1);
    Cyclotomic::Elem total = R.zero();
    for (int e = 0; e < n; ++e) total = R.add(total, R.root(e));
    CHECK(R.as_integer(total) == (n == 1 ? 1 : 0));
  }
  Cyclotomic R(8);
  auto s = R.add(R.root(1), R.root(-1));
  CHECK(R.as_integer(R.mul(s, s)) == 2);
  CHECK_FALSE(R.as_integer(s));
  CHECK(R.in_subring(R.root(2), 2));
  CHECK_FALSE(R.in_subring(R.root(1), 2));
}

TEST_CASE("inertial type descriptors") {
  CHECK(InertialType::parse("trivial").kind == InertialType::TrivialSplit);
  InertialType st = InertialType::parse("steinberg:1");
  CHECK(st.kind == InertialType::ScalarSteinberg);
  CHECK(st.k1 == 1);
  InertialType ps = InertialType::parse("principal:0,2");
  CHECK(ps.format() == "TamePrincipal(0,2)");
  for (const auto& t : {InertialType{}, st, ps}) {
    InertialType back = InertialType::parse(t.format());
    CHECK(back.format() == t.format());
  }
  CHECK_THROWS_AS(InertialType::parse("cuspidal:3"), std::invalid_argument);
  CHECK_THROWS_AS(InertialType::parse("banana"), std::invalid_argument);
  CHECK_THROWS_AS(pregular_classes(4), std::invalid_argument);
}

TEST_CASE("class counts and known small decompositions") {
  for (int p : {2, 3, 5, 7}) CHECK(pregular_classes(p).size() == static_cast<size_t>(p * (p - 1)));
  BrauerTable t2(2);
  CHECK(decompose(t2, t2.sym(2, 0)).m == MultiplicityTable{{{0, 0}, 1}, {{1, 0}, 1}});
  BrauerTable t3(3);
  CHECK(decompose(t3, t3.sym(3, 0)).m == MultiplicityTable{{{1, 0}, 1}, {{1, 1}, 1}});
  CHECK(decompose(t3, t3.sym(4, 0)).m == MultiplicityTable{{{0, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}});
  for (int p : {2, 3, 5, 7}) {
    BrauerTable t(p);
    CHECK(decompose(t, t.steinberg()).m == MultiplicityTable{{{p - 1, 0}, 1}});
    CHECK(decompose(t, t.principal_series(0, 0)).m == MultiplicityTable{{{0, 0}, 1}, {{p - 1, 0}, 1}});
    CHECK(t.dimension(t.principal_series(0, 1)) == p + 1);
  }
}

TEST_CASE("decompose agrees with explicit composition series") {
  for (int p : {2, 3, 5}) {
    Field k = Field::prime(p);
    BrauerTable t(p);
    for (int m = 0; m <= 2 * p; ++m)
      for (int a = 0; a < p - 1; ++a) {
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(a);
        Decomposition d = decompose(t, t.sym(m, a));
        CHECK(d.m == oracle::composition_factors(k, oracle::sym_module(k, m, a)));
        CHECK(dimension_sum(d.m) == m + 1);
        CHECK(t.central_exponent(t.sym(m, a)) == mod(m + 2 * a, p - 1));
      }
  }
}

TEST_CASE("twists by the Steinberg character agree with tensor product modules") {
  for (int p : {2, 3}) {
    Field k = Field::prime(p);
    BrauerTable t(p);
    oracle::Module st = oracle::sym_module(k, p - 1, 0);
    for (int m = 0; m <= p; ++m) {
      CAPTURE(p);
      CAPTURE(m);
      auto f = t.product(t.sym(m, 0), t.steinberg());
      CHECK(decompose(t, f).m == oracle::composition_factors(k, tensor(k, oracle::sym_module(k, m, 0), st)));
    }
  }
}

TEST_CASE("every Serre weight is the crystalline weight of its own sigma") {
  for (int p : {2, 3, 5}) {
    BrauerTable t(p);
    for (int r = 0; r < p; ++r)
      for (int s = 0; s < p - 1; ++s) {
        SerreWeight w{r, s};
        auto f = sigma_character(t, weight_of_sigma(w), true);
        CHECK(decompose(t, f).m == MultiplicityTable{{w, 1}});
      }
  }
}

TEST_CASE("sums decompose additively and non-characters are rejected") {
  BrauerTable t(5);
  auto f = t.sum(t.sym(3, 1), t.sym(7, 2));
  MultiplicityTable expect = decompose(t, t.sym(3, 1)).m;
  for (auto& [w, n] : decompose(t, t.sym(7, 2)).m) expect[w] += n;
  CHECK(decompose(t, f).m == expect);
  CHECK(dimension_sum(expect) == 12);
  BrauerCharacter neg = t.sym(1, 0);
  for (auto& v : neg.values) v = t.ring().scale(-1, v);
  CHECK_THROWS_AS(decompose(t, neg), NotBrauerCharacter);
  CHECK_THROWS_AS(sigma_character(t, HodgeType{2, 2, {}}, false), std::invalid_argument);
}
