#include <chrono>
#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "versalkit/determinants.hpp"
#include "versalkit/io.hpp"
#include "versalkit/local_ops.hpp"
#include "versalkit/models.hpp"

using namespace vk;

namespace {

// l(k[x]/(I + m^(n+1))) by listing exponent vectors
long long brute_length(const std::vector<std::vector<int>>& gens, int nvars, int n) {
  long long count = 0;
  std::vector<int> e(nvars, 0);
  while (true) {
    int deg = 0;
    for (int v : e) deg += v;
    if (deg <= n) {
      bool in_ideal = false;
      for (const auto& g : gens) {
        bool div = true;
        for (int i = 0; i < nvars; ++i) div = div && g[i] <= e[i];
        in_ideal = in_ideal || div;
      }
      count += !in_ideal;
    }
    int i = 0;
    while (i < nvars && ++e[i] > n) e[i++] = 0;
    if (i == nvars) break;
  }
  return count;
}

Poly mono_poly(const std::vector<int>& e) { return poly_mono(mono_from_exps(e)); }

}  // namespace

TEST_CASE("Hilbert-Samuel lengths match exhaustive monomial counts") {
  std::mt19937 rng(7);
  Field k = Field::prime(2);
  for (int trial = 0; trial < 40; ++trial) {
    int nvars = 1 + trial % 3;
    int ngens = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> gens;
    std::vector<Poly> polys;
    for (int g = 0; g < ngens; ++g) {
      std::vector<int> e(nvars);
      for (auto& x : e) x = static_cast<int>(rng() % 3);
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
      gens.push_back(e);
      polys.push_back(mono_poly(e));
    }
    std::vector<std::string> vars = {"a", "b", "c"};
    vars.resize(nvars);
    LocalRing R = LocalRing::truncated(k, vars, polys, 8);
    auto L = R.hilbert_lengths();
    REQUIRE(L.size() == 8);
    for (int n = 0; n < 8; ++n) CHECK(L[n] == brute_length(gens, nvars, n));
  }
}

TEST_CASE("Hilbert-Samuel dimension and multiplicity of the standard examples") {
  struct Case {
    std::string file;
    int dim;
    long long mult;
  };
  for (const auto& c : {Case{"rings/power_series_a.ini", 1, 1}, Case{"rings/node_ab.ini", 1, 2},
                        Case{"rings/bxy.ini", 2, 3}}) {
    CAPTURE(c.file);
    auto t0 = std::chrono::steady_clock::now();
    HilbertSamuelData h = hilbert_samuel(io::load_ring(fixture(c.file)).ring, 10);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(h.dim == c.dim);
    CHECK(h.mult == c.mult);
    CHECK(secs < 1.0);
  }
}

TEST_CASE("a cusp has multiplicity 2") {
  Field k = Field::prime(5);
  std::vector<std::string> v = {"a", "b"};
  LocalRing R = LocalRing::truncated(k, v, {parse_poly("a^2 - b^3", v, k)}, 10);
  HilbertSamuelData h = hilbert_samuel(R);
  CHECK(h.dim == 1);
  CHECK(h.mult == 2);
}

TEST_CASE("fit_lengths needs a window of dim + 2 agreeing differences") {
  HilbertSamuelData h = fit_lengths({1, 3, 6, 10, 15, 21}, 2);
  CHECK(h.dim == 2);
  CHECK(h.mult == 1);
  HilbertSamuelData c = fit_lengths({1, 2, 2, 2, 2}, 1);
  CHECK(c.dim == 0);
  CHECK(c.mult == 2);
  CHECK(c.stable_from == 1);
  try {
    fit_lengths({1, 4, 10}, 3);
    FAIL("expected a truncation error");
  } catch (const TruncationError& e) {
    CHECK(e.suggested_N == 6);
  }
}

TEST_CASE("adjoining x, y with xy = c raises the dimension by one and is free over A[z]") {
  for (const auto* file : {"rings/adjoin_residue.ini", "rings/adjoin_a.ini", "rings/adjoin_node.ini",
                           "rings/adjoin_dual.ini"}) {
    CAPTURE(file);
    io::RingSpec s = io::load_ring(fixture(file));
    AdjoinResult ad = adjoin_xy_minus_c(s.ring, s.ring.parse(*s.adjoin_c), 10);
    CHECK(ad.dim_ok);
    CHECK(ad.hs_B.dim == ad.hs_A.dim + 1);
    CHECK(free_over_z_check(s.ring, *ad.B).pass);
  }
}

TEST_CASE("free_over_z_check rejects a ring without the relation") {
  Field k = Field::prime(3);
  LocalRing A = LocalRing::truncated(k, {"a"}, {}, 6);
  LocalRing B = LocalRing::truncated(k, {"a", "x", "y"}, {}, 6);
  FreeOverZReport r = free_over_z_check(A, B);
  CHECK_FALSE(r.pass);
  CHECK(r.failure_degree >= 0);
  CHECK_FALSE(r.counterexample.empty());
}

TEST_CASE("reducedness of monomial rings") {
  Field k = Field::prime(2);
  std::vector<std::string> v = {"a", "b"};
  CHECK(is_reduced_monomial(LocalRing::truncated(k, v, {parse_poly("a*b", v, k)}, 6)));
  CHECK_FALSE(is_reduced_monomial(LocalRing::truncated(k, v, {parse_poly("a^2*b", v, k)}, 6)));
}

TEST_CASE("local ring arithmetic") {
  Field k = Field::prime(3);
  std::vector<std::string> v = {"a", "b"};
  LocalRing R = LocalRing::truncated(k, v, {parse_poly("a*b", v, k)}, 5);
  auto x = R.parse("1 + a + 2*b^2");
  auto xi = R.inverse(x);
  CHECK(R.mul(x, xi) == R.one());
  CHECK(R.parse(R.format(x)) == x);
  CHECK(R.is_zero(R.mul(R.variable(0), R.variable(1))));
  CHECK(R.is_zero(R.pow(R.variable(0), 5)));
}

TEST_CASE("ring maps must kill the relations") {
  Field k = Field::prime(3);
  auto B = std::make_shared<const LocalRing>(LocalRing::truncated(k, {"x", "y"}, {parse_poly("x*y", {"x", "y"}, k)}, 6));
  auto C = std::make_shared<const LocalRing>(LocalRing::artinian(k, {"s"}, {parse_poly("s^3", {"s"}, k)}));
  CHECK(RingMap(B, C, {C->parse("s"), C->parse("s^2")}).well_defined());
  CHECK_FALSE(RingMap(B, C, {C->parse("s"), C->parse("s")}).well_defined());
}

TEST_CASE("lift equivalence matches exhaustive diagonal conjugation") {
  GroupModel m = models::model_a();
  auto K = std::make_shared<const LocalRing>(LocalRing::residue_field(m.k));
  VersalModel v = versal_matrix_model(m, split_pair(m, K));
  REQUIRE(v.pass());
  auto C = std::make_shared<const LocalRing>(LocalRing::artinian(m.k, {"s"}, {parse_poly("s^3", {"s"}, m.k)}));
  std::vector<LocalRing::Elem> maxideal;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) maxideal.push_back(C->add(C->scale(a, C->parse("s")), C->scale(b, C->parse("s^2"))));
  std::vector<RingMap> maps;
  for (const auto& X : maxideal)
    for (const auto& Y : maxideal) {
      RingMap f(v.B, C, {X, Y});
      if (f.well_defined()) maps.push_back(f);
    }
  CHECK(maps.size() == 45);
  auto units = principal_units(*C);
  CHECK(units.size() == 9);
  std::vector<MatrixRep> pushed;
  for (const auto& f : maps) pushed.push_back(push_forward(v.rho, f));
  int equivalent = 0;
  for (size_t i = 0; i < maps.size(); ++i)
    for (size_t j = 0; j < maps.size(); ++j) {
      bool conj = false;
      for (const auto& l : units) conj = conj || conjugate_diag(pushed[j], l).images == pushed[i].images;
      LiftEquivalence le = lift_equivalence(maps[i], maps[j]);
      CHECK(le.equivalent == conj);
      equivalent += conj;
    }
  CHECK(equivalent > static_cast<int>(maps.size()));
}
