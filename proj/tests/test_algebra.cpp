#include "doctest.h"
#include "support/ch_setup.hpp"
#include "versalkit/models.hpp"

using namespace vk;

TEST_CASE("CH(k) of MODEL-A is a GMA of rank 4 with rank-1 Peirce blocks") {
  ChSetup s = build_ch_split(models::model_a());
  const AssocAlgebra& A = s.ch.alg();
  CHECK(A.dim() == 4);
  CHECK(free_rank(A) == 4);
  Peirce pe = peirce_decomposition(A, s.e1, s.e2);
  CHECK(pe.complete);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(pe.dim(i, j) == 1);
  GmaFrame f = gma_frame(A, s.e1, s.e2, s.ch.trace_fn());
  CHECK(f.relations_hold());
  CHECK(f.relations.size() >= 17);
  CHECK(A.ring().is_zero(f.c));
  CHECK(free_rank_one_check(A, s.e1).pass());
  CHECK(free_rank_one_check(A, s.e2).pass());
}

TEST_CASE("CH ideal matches the span-saturation closure") {
  for (const auto& m : {models::model_a(), models::model_e(), models::model_d()}) {
    CAPTURE(m.name);
    auto R = std::make_shared<const LocalRing>(LocalRing::residue_field(m.k));
    auto GA = std::make_shared<const AssocAlgebra>(AssocAlgebra::group_algebra(m.G, R));
    DeterminantPair det = split_pair(m, R);
    std::vector<Vec> gens;
    for (int g = 0; g < m.G->order(); ++g) gens.push_back(cayley_hamilton_element(*GA, det, g));
    EchelonSpace J = ideal_closure(*GA, gens);
    CHECK(J.dim() == saturated_ideal_dim(*GA, gens));
    CHECK(J.dim() == ideal_closure(*GA, gens, true).dim());
    CHECK(GA->dim() - J.dim() == 4);
  }
}

TEST_CASE("CH over F3[e] is free of rank 4 for the zero and twist deformations") {
  GroupModel m = models::model_a();
  RingPtr D = dual_numbers(m.k);
  ChSetup zero = build_ch_split(m, D);
  CHECK(free_rank(zero.ch.alg()) == 4);
  TangentSpace ts = tangent_space(m);
  REQUIRE(ts.dim() == 3);
  TangentVector v = tangent_add(m.k, ts.basis[1], ts.basis[2]);
  ChSetup tw = build_ch(m, pair_from_tangent(m, v, D));
  CHECK(free_rank(tw.ch.alg()) == 4);
  GmaFrame f = gma_frame(tw.ch.alg(), tw.e1, tw.e2, tw.ch.trace_fn());
  CHECK(f.relations_hold());
}

TEST_CASE("CH over F3[e] is not free for a deformation off the twist line") {
  GroupModel m = models::model_a();
  TangentSpace ts = tangent_space(m);
  ChSetup s = build_ch(m, pair_from_tangent(m, ts.basis[0], dual_numbers(m.k)));
  CHECK_FALSE(free_rank(s.ch.alg()).has_value());
}

TEST_CASE("block modules are the two nonsplit extensions") {
  for (const auto& m : {models::model_a(), models::model_b(), models::model_e()}) {
    CAPTURE(m.name);
    ChSetup s = build_ch_split(m);
    const AssocAlgebra& A = s.ch.alg();
    MatrixRep r1 = nonsplit_extension(m, 1), r2 = nonsplit_extension(m, 2);
    ModuleIso a = block_module_compare(A, s.e2, r1);
    ModuleIso b = block_module_compare(A, s.e1, r2);
    CHECK(a.found);
    CHECK(b.found);
    CHECK_FALSE(block_module_compare(A, s.e1, r1).found);
    CHECK_FALSE(block_module_compare(A, s.e2, r2).found);
  }
}

TEST_CASE("centre is the commutant of the group images") {
  for (const auto& m : {models::model_a(), models::model_c()}) {
    ChSetup s = build_ch_split(m, dual_numbers(m.k));
    const AssocAlgebra& A = s.ch.alg();
    auto z = centre(A);
    // independent solve: commute with the images of the group generators and with R
    std::vector<Vec> rows;
    int n = A.dim();
    std::vector<Vec> gens;
    for (int g : m.G->generators()) gens.push_back(s.ch.image(g));
    for (int mu = 0; mu < A.ring().dim(); ++mu) gens.push_back(A.rbasis_scale(mu, A.unit()));
    for (const auto& g : gens) {
      std::vector<Vec> cols;
      for (int j = 0; j < n; ++j) cols.push_back(A.sub(A.mul(g, A.basis(j)), A.mul(A.basis(j), g)));
      for (int i = 0; i < n; ++i) {
        Vec r(n);
        for (int j = 0; j < n; ++j) r[j] = cols[j][i];
        rows.push_back(r);
      }
    }
    auto ns = nullspace(A.field(), rows, n);
    CHECK(same_span(A.field(), z, ns, n));
    CHECK(static_cast<int>(z.size()) == A.ring().dim());
  }
}

TEST_CASE("End of the regular module is CH^op") {
  ChSetup s = build_ch_split(models::model_a(), dual_numbers(Field::prime(3)));
  EndReport r = opposite_endo_check(s.ch.alg());
  CHECK(r.match);
  CHECK(r.anti_mult);
  CHECK(r.end_dim == s.ch.alg().dim());
}

TEST_CASE("d(g) g^-1 defines an involution of CH") {
  for (const auto& m : {models::model_a(), models::model_d(), models::model_e()}) {
    CAPTURE(m.name);
    InvolutionReport r = ch_involution(build_ch_split(m, dual_numbers(m.k)).ch);
    CHECK(r.pass());
  }
}

TEST_CASE("cocycles read off the frame are nonsplit") {
  for (const auto& m : models::generic_models()) {
    CAPTURE(m.name);
    ChSetup s = build_ch_split(m);
    GmaFrame f = gma_frame(s.ch.alg(), s.e1, s.e2, s.ch.trace_fn());
    CHECK(cocycle_extraction(s.ch.alg(), f, m).pass());
  }
}

TEST_CASE("serial and parallel associativity checks agree") {
  ChSetup s = build_ch_split(models::model_b(), dual_numbers(Field::prime(5)));
  const AssocAlgebra& A = s.ch.alg();
  CHECK(A.associativity_failure(kernels::Mode::Serial) == A.associativity_failure(kernels::Mode::Parallel));
  CHECK_FALSE(A.associativity_failure().found);
  CHECK(A.unit_law());
}
