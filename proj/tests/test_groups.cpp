#include <numeric>
#include <random>

#include "doctest.h"
#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "versalkit/io.hpp"
#include "versalkit/models.hpp"

using namespace vk;

TEST_CASE("shipped models have the stated orders and are valid") {
  std::vector<std::pair<GroupModel, int>> cases = {{models::model_a(), 18},       {models::model_a_prime(), 18},
                                                   {models::model_b(), 50},       {models::model_c(), 147},
                                                   {models::model_d(), 24},       {models::model_e(), 10},
                                                   {models::model_f(), 250}};
  for (auto& [m, order] : cases) {
    CAPTURE(m.name);
    CHECK(m.G->order() == order);
    CHECK(validate_model(m).empty());
    CHECK(m.P.size() * m.H.size() == static_cast<size_t>(order));
  }
}

TEST_CASE("ext dimensions agree with exhaustive cocycle enumeration") {
  auto ms = models::generic_models();
  ms.push_back(models::model_a_prime());
  for (const auto& m : ms) {
    CAPTURE(m.name);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        CAPTURE(i);
        CAPTURE(j);
        CHECK(ext_dimension(m, i, j) == brute::ext_dimension(m, i, j));
      }
  }
}

TEST_CASE("cocycle space dimensions match the brute count") {
  GroupModel m = models::model_a();
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      auto psi = twist(m, i, j);
      CocycleSpace cs = cocycle_space(m, psi);
      long long z = 1, b = 1;
      for (size_t t = 0; t < cs.cocycles.size(); ++t) z *= 3;
      for (size_t t = 0; t < cs.coboundaries.size(); ++t) b *= 3;
      CHECK(z == brute::cocycle_count(m, psi));
      CHECK(b == brute::coboundary_count(m, psi));
      for (const auto& c : cs.coboundaries) CHECK(is_coboundary(m, psi, c));
      bool some_nonsplit = false;
      for (const auto& c : cs.cocycles) some_nonsplit = some_nonsplit || !is_coboundary(m, psi, c);
      CHECK(some_nonsplit == (cs.h1() > 0));
    }
}

TEST_CASE("genericity passes on the shipped models and fails on MODEL-A'") {
  for (const auto& m : models::generic_models()) {
    CAPTURE(m.name);
    CHECK(genericity_check(m).pass);
  }
  GenericityReport r = genericity_check(models::model_a_prime());
  CHECK_FALSE(r.pass);
  CHECK(r.ext[0][1] == 2);
  REQUIRE_FALSE(r.reasons.empty());
  CHECK(r.reasons.front().find("ext_dimension(1,2) = 2") != std::string::npos);
}

TEST_CASE("ext dimensions do not depend on the element order") {
  std::mt19937 rng(20261016);
  for (const auto& m : {models::model_a(), models::model_c(), models::model_f()}) {
    std::vector<int> perm(m.G->order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    GroupModel pm = brute::permuted_model(m, perm);
    CAPTURE(m.name);
    CHECK(validate_model(pm).empty());
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) CHECK(ext_dimension(pm, i, j) == ext_dimension(m, i, j));
  }
}

TEST_CASE("model files reproduce the built-in models") {
  std::vector<std::pair<std::string, GroupModel>> cases = {
      {"models/model_a.ini", models::model_a()}, {"models/model_a_prime.ini", models::model_a_prime()},
      {"models/model_b.ini", models::model_b()}, {"models/model_c.ini", models::model_c()},
      {"models/model_d.ini", models::model_d()}, {"models/model_e.ini", models::model_e()},
      {"models/model_f.ini", models::model_f()}};
  for (auto& [path, m] : cases) {
    CAPTURE(path);
    GroupModel f = io::load_model(fixture(path));
    CHECK(f.name == m.name);
    CHECK(f.G->table() == m.G->table());
    CHECK(f.chi1 == m.chi1);
    CHECK(f.chi2 == m.chi2);
    CHECK(f.P == m.P);
    CHECK(f.H == m.H);
  }
}

TEST_CASE("table-given P builds S3") {
  GroupModel m = io::load_model(fixture("models/model_s3_table.ini"));
  CHECK(m.G->order() == 6);
  CHECK(validate_model(m).empty());
  CHECK(ext_dimension(m, 1, 2) == brute::ext_dimension(m, 1, 2));
  CHECK(genericity_check(m).pass);
}

TEST_CASE("heisenberg group is nonabelian of order p^3 with central commutator") {
  FiniteGroup H = FiniteGroup::heisenberg(3, {"a", "b", "c"});
  CHECK(H.order() == 27);
  int a = H.find("a"), b = H.find("b"), c = H.find("c");
  CHECK(H.mul(a, b) != H.mul(b, a));
  CHECK(H.mul(H.mul(a, b), H.mul(H.inv(a), H.inv(b))) == c);
  for (int g = 0; g < H.order(); ++g) CHECK(H.mul(g, c) == H.mul(c, g));
  CHECK_THROWS(heisenberg_automorphism(3, 0, 1));
}

TEST_CASE("bad actions are rejected") {
  FiniteGroup P = FiniteGroup::abelian({3}, {"u"});
  FiniteGroup H = FiniteGroup::cyclic(2, "h");
  CHECK_THROWS(abelian_automorphism({3}, {{0}}));
  // inversion has order 2, so it does not define an action of C3
  FiniteGroup H3 = FiniteGroup::cyclic(3, "h");
  CHECK_THROWS(action_from_generators(P, H3, {1}, {abelian_automorphism({3}, {{2}})}));
  CHECK_NOTHROW(action_from_generators(P, H, {1}, {abelian_automorphism({3}, {{2}})}));
}

TEST_CASE("from_table rejects non-associative tables") {
  // a quasigroup of order 3 that is not a group: x*y = -x-y mod 3
  std::vector<int> t(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) t[x * 3 + y] = ((6 - x - y) % 3);
  CHECK_THROWS(FiniteGroup::from_table(t, {"a", "b", "c"}));
}
