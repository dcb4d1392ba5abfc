// One line per acceptance criterion; exit status 1 when any line fails.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "support/ch_setup.hpp"
#include "support/composition_series.hpp"
#include "support/fixtures.hpp"
#include "versalkit/cycles.hpp"
#include "versalkit/io.hpp"
#include "versalkit/local_ops.hpp"
#include "versalkit/models.hpp"
#include "versalkit/runner.hpp"
#include "versalkit/weights.hpp"

using namespace vk;

namespace {

struct Check {
  bool pass = true;
  std::vector<std::string> failures;
  std::ostringstream note;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---------------------------------------------------------------- 1

void gma_structure(Check& c) {
  ChSetup s = build_ch_split(models::model_a());
  const AssocAlgebra& A = s.ch.alg();
  c.expect(free_rank(A) == 4, "CH(k) rank 4");
  Peirce pe = peirce_decomposition(A, s.e1, s.e2);
  c.expect(pe.complete, "Peirce decomposition complete");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c.expect(pe.dim(i, j) == 1, "Peirce block rank 1");
  GmaFrame f = gma_frame(A, s.e1, s.e2, s.ch.trace_fn());
  for (const auto& [name, ok] : f.relations) c.expect(ok, "relation " + name);

  std::vector<Vec> gens;
  for (int g = 0; g < s.m.G->order(); ++g) gens.push_back(cayley_hamilton_element(*s.group_alg, s.ch.det, g));
  int closure = ideal_closure(*s.group_alg, gens).dim();
  c.expect(closure == saturated_ideal_dim(*s.group_alg, gens), "ideal closure equals span saturation");
  c.expect(s.group_alg->dim() - closure == 4, "quotient dimension from the oracle");

  RingPtr D = dual_numbers(s.m.k);
  c.expect(free_rank(build_ch_split(s.m, D).ch.alg()) == 4, "free of rank 4 over F3[e], zero deformation");
  TangentSpace ts = tangent_space(s.m);
  TangentVector tw = tangent_add(s.m.k, ts.basis[1], ts.basis[2]);
  ChSetup twisted = build_ch(s.m, pair_from_tangent(s.m, tw, D));
  c.expect(free_rank(twisted.ch.alg()) == 4, "free of rank 4 over F3[e], twist deformation");
  c.expect(gma_frame(twisted.ch.alg(), twisted.e1, twisted.e2, twisted.ch.trace_fn()).relations_hold(),
           "relations over F3[e]");
  c.note << "relations=" << f.relations.size() << " ideal_dim=" << closure;
}

// ---------------------------------------------------------------- 2

void block_modules(Check& c) {
  for (const auto& m : {models::model_a(), models::model_b(), models::model_e()}) {
    ChSetup s = build_ch_split(m);
    const AssocAlgebra& A = s.ch.alg();
    MatrixRep r1 = nonsplit_extension(m, 1), r2 = nonsplit_extension(m, 2);
    c.expect(block_module_compare(A, s.e2, r1).found, m.name + ": CH e_chi2 ~ rho1");
    c.expect(block_module_compare(A, s.e1, r2).found, m.name + ": CH e_chi1 ~ rho2");
    c.expect(!block_module_compare(A, s.e1, r1).found, m.name + ": no intertwiner CH e_chi1 -> rho1");
    c.expect(!block_module_compare(A, s.e2, r2).found, m.name + ": no intertwiner CH e_chi2 -> rho2");
  }
  c.note << "models=A,B,E";
}

// ---------------------------------------------------------------- 3

void tangent_exactness_check(Check& c) {
  int exact = 0, frame_only = 0;
  std::ostringstream dims;
  for (const auto& m : models::generic_models()) {
    ExactnessReport r = tangent_exactness(m);
    bool ok = r.kernel_equals_image && r.sandwich;
    c.expect(ok, m.name + ": exactness and sandwich");
    exact += ok;
    frame_only += ok && r.frame_failures == 0;
    dims << m.name.substr(m.name.size() - 1) << "=" << r.dim << " ";
  }
  c.expect(frame_only >= 3, "at least 3 models exact through the frame route");
  c.note << "exact=" << exact << " frame_route=" << frame_only << " dims " << dims.str();
}

// ---------------------------------------------------------------- 4

void endo_centre(Check& c) {
  GroupModel m = models::model_a();
  for (RingPtr R : {RingPtr(std::make_shared<const LocalRing>(LocalRing::residue_field(m.k))), dual_numbers(m.k)}) {
    std::string tag = R->dim() == 1 ? "CH(k)" : "CH(k[e])";
    ChSetup s = build_ch_split(m, R);
    const AssocAlgebra& A = s.ch.alg();
    EndReport e = opposite_endo_check(A);
    c.expect(e.match && e.anti_mult && e.end_dim == A.dim(), tag + ": End = CH^op");
    c.expect(ch_involution(s.ch).pass(), tag + ": involution");

    std::vector<Vec> rows, gens;
    int n = A.dim();
    for (int g : m.G->generators()) gens.push_back(s.ch.image(g));
    for (int mu = 0; mu < A.ring().dim(); ++mu) gens.push_back(A.rbasis_scale(mu, A.unit()));
    for (const auto& g : gens)
      for (int i = 0; i < n; ++i) {
        Vec row(n);
        for (int j = 0; j < n; ++j) row[j] = A.sub(A.mul(g, A.basis(j)), A.mul(A.basis(j), g))[i];
        rows.push_back(row);
      }
    auto solved = nullspace(A.field(), rows, n);
    auto z = centre(A);
    c.expect(same_span(A.field(), z, solved, n), tag + ": centre equals the commutation solve");
    GmaFrame f = gma_frame(A, s.e1, s.e2, s.ch.trace_fn());
    auto formula = gma_centre(A, f);
    c.expect(same_span(A.field(), formula, solved, n),
             tag + ": centre {a1 e1 + a2 e2 : c(a1 - a2) = 0} (dim " + std::to_string(formula.size()) +
                 ") vs solve (dim " + std::to_string(solved.size()) + ")");
  }
}

// ---------------------------------------------------------------- 5

void versal_model(Check& c) {
  GroupModel m = models::model_a();
  auto K = std::make_shared<const LocalRing>(LocalRing::residue_field(m.k));
  VersalModel v = versal_matrix_model(m, split_pair(m, K));
  c.expect(v.multiplicative, "A over k: multiplicative");
  c.expect(v.ch_identity && v.trace_det_ok, "A over k: Cayley-Hamilton identity");
  c.expect(multiplicativity_failure(v.rho, kernels::Mode::Serial) == multiplicativity_failure(v.rho),
           "serial and parallel multiplicativity agree");
  c.expect(triangular_type(m, specialize_zero(v.rho, "x"), true, "y").pass(), "x = 0 is upper triangular nonsplit");
  c.expect(triangular_type(m, specialize_zero(v.rho, "y"), false, "x").pass(), "y = 0 is lower triangular nonsplit");

  GroupModel e = models::model_e();
  io::PairSpec pe = io::load_pair(fixture("pairs/model_e_tangent.ini"));
  VersalModel ve = versal_matrix_model(e, pe.det);
  c.expect(!pe.det.A->is_zero(ve.c), "E over k[e]: c nonzero");
  c.expect(ve.pass(), "E over k[e]: multiplicative with Cayley-Hamilton identity");

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
  auto units = principal_units(*C);
  std::vector<MatrixRep> pushed;
  for (const auto& f : maps) pushed.push_back(push_forward(v.rho, f));
  int mismatches = 0;
  for (size_t i = 0; i < maps.size(); ++i)
    for (size_t j = 0; j < maps.size(); ++j) {
      bool conj = false;
      for (const auto& l : units) conj = conj || conjugate_diag(pushed[j], l).images == pushed[i].images;
      mismatches += lift_equivalence(maps[i], maps[j]).equivalent != conj;
    }
  c.expect(mismatches == 0, "lift_equivalence matches diagonal conjugation");
  c.note << "c_E=" << pe.det.A->format(ve.c) << " maps=" << maps.size() << " mismatches=" << mismatches;
}

// ---------------------------------------------------------------- 6

void commutative_ledger(Check& c) {
  struct Case {
    const char* file;
    int dim;
    long long e;
  };
  for (const Case& k : {Case{"rings/power_series_a.ini", 1, 1}, Case{"rings/node_ab.ini", 1, 2},
                        Case{"rings/bxy.ini", 2, 3}}) {
    io::RingSpec s = io::load_ring(fixture(k.file));
    auto t0 = Clock::now();
    HilbertSamuelData h = hilbert_samuel(retruncate(s.ring, 10), 10);
    double dt = seconds_since(t0);
    c.expect(h.dim == k.dim && h.mult == k.e, std::string(k.file) + ": (dim, e)");
    c.expect(dt < 1.0, std::string(k.file) + ": under 1 s");
    c.note << k.file << "=(" << h.dim << "," << h.mult << ") ";
  }
  for (const auto* file : {"rings/adjoin_residue.ini", "rings/adjoin_a.ini", "rings/adjoin_node.ini",
                           "rings/adjoin_dual.ini"}) {
    io::RingSpec s = io::load_ring(fixture(file));
    AdjoinResult ad = adjoin_xy_minus_c(s.ring, s.ring.parse(*s.adjoin_c), 10, s.x, s.y);
    c.expect(free_over_z_check(s.ring, *ad.B, s.x, s.y).pass, std::string(file) + ": free over A[[z]]");
  }
  for (const auto* file : {"rings/control_ab.ini", "rings/control_a2b.ini"}) {
    io::RingSpec s = io::load_ring(fixture(file));
    ControlCycleReport r = control_cycle_check(s.ring, *s.control_prime, s.ring.parse(s.control_c));
    c.expect(r.pass() && r.e_Ap == r.e_Bq && r.len_Ap == r.len_Bq, std::string(file) + ": control cycle");
  }
}

// ---------------------------------------------------------------- 7

MonomialQuotient realize(const Cycle& cyc) {
  std::optional<MonomialQuotient> out;
  for (const auto& P : cyc.support()) {
    long long mult = cyc.terms.at(P.vars);
    std::vector<std::string> gens;
    for (size_t i = 0; i < P.vars.size(); ++i)
      gens.push_back(cyc.ambient[P.vars[i]] + (i == 0 ? "^" + std::to_string(mult) : ""));
    MonomialQuotient Q = MonomialQuotient::parse(cyc.ambient, gens);
    out = out ? intersect(*out, Q) : Q;
  }
  return out ? *out : MonomialQuotient::parse(cyc.ambient, {"1"});
}

void cycle_calculus(Check& c) {
  c.expect(cycle_of(MonomialQuotient::parse({"x", "y"}, {"x^2*y"}), 1).format() == "2[(x)] + [(y)]", "x^2 y");
  c.expect(cycle_of(MonomialQuotient::parse({"x", "y", "z"}, {"x^2*y", "x*z"}), 2).format() == "[(x)]",
           "(x^2 y, x z) in dimension 2");
  c.expect(cycle_of(MonomialQuotient::parse({"x", "y", "z"}, {"x*y"}), 2).format() == "[(x)] + [(y)]", "xy");
  int fixtures = 0;
  for (const auto* f : {"suite/cycles_two_components.ini", "suite/cycles_embedded.ini", "suite/cycles_cut.ini",
                        "suite/cycles_additive.ini", "suite/cycles_additivity_violation.ini"}) {
    cli::Report r = cli::run(cli::parse_scenario(fixture(f)));
    c.expect(r.pass, std::string(f));
    ++fixtures;
  }

  Field k = Field::prime(2);
  std::vector<std::string> amb = {"a", "b"};
  for (const auto& [t1, t2] : std::vector<std::pair<std::string, std::string>>{
           {"2[(a)] + [(b)]", "3[(b)]"}, {"[(a)]", "0"}, {"0", "2[(b)]"}, {"[(a)] + [(b)]", "[(a)] + 2[(b)]"}}) {
    Cycle img = alpha(io::parse_cycle(t1, amb, 1), io::parse_cycle(t2, amb, 1));
    LocalRing ring = realize(img).to_ring(k, 10);
    for (const auto& P : img.support())
      c.expect(local_length_general(ring, P.names(), 10) == img.terms.at(P.vars),
               "alpha multiplicity at " + P.format() + " for " + t1 + " | " + t2);
  }

  std::mt19937 rng(3);
  std::vector<std::string> vars = {"a", "b", "c"};
  auto gens = [&] {
    std::vector<std::string> g;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
      std::string s;
      for (const auto& v : vars) {
        int e = static_cast<int>(rng() % 3);
        if (e) s += (s.empty() ? "" : "*") + v + "^" + std::to_string(e);
      }
      g.push_back(s.empty() ? "a" : s);
    }
    return g;
  };
  int cases = 0, violated = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto I1 = MonomialQuotient::parse(vars, gens()), I2 = MonomialQuotient::parse(vars, gens());
    for (int d = 0; d < 3; ++d) {
      AdditivityReport r = additivity_check(I1, I2, std::nullopt, d);
      c.expect(r.additive == r.hypothesis || !r.hypothesis, "additive under the hypothesis");
      c.expect(r.hypothesis == r.violations.empty(), "violations reported exactly when the hypothesis fails");
      c.expect(r.pass() == r.hypothesis, "additivity passes exactly under the hypothesis");
      ++cases;
      violated += !r.hypothesis;
    }
  }
  cli::Report bm = cli::run(cli::parse_scenario(fixture("suite/cycles_bm_symmetric.ini")));
  c.expect(bm.pass, "symmetric scenario");
  cli::Report bad = cli::run(cli::parse_scenario(fixture("failing/cycles_bm_perturbed.ini")));
  c.expect(!bad.pass && !bad.payload.at("diff").at("entries").empty(), "perturbed scenario diffs");
  c.note << "fixtures=" << fixtures << " additivity_cases=" << cases << " violations=" << violated;
}

// ---------------------------------------------------------------- 8

void serre_weights(Check& c) {
  int weights = 0, compared = 0;
  for (int p : {2, 3, 5}) {
    Field k = Field::prime(p);
    BrauerTable t(p);
    for (int r = 0; r < p; ++r)
      for (int s = 0; s < p - 1; ++s) {
        c.expect(decompose(t, brauer_char_sym(t, r, s)).m == MultiplicityTable{{{r, s}, 1}}, "unit table");
        ++weights;
      }
    for (int m = 0; m <= 2 * p; ++m)
      for (int a = 0; a < p - 1; ++a) {
        auto f = brauer_char_sym(t, m, a);
        Decomposition d = decompose(t, f);
        std::string tag = "p=" + std::to_string(p) + " m=" + std::to_string(m) + " a=" + std::to_string(a);
        c.expect(d.m == oracle::composition_factors(k, oracle::sym_module(k, m, a)), tag + ": composition series");
        c.expect(dimension_sum(d.m) == m + 1, tag + ": dimension sum");
        auto ce = t.central_exponent(f);
        c.expect(ce.has_value(), tag + ": central character");
        for (const auto& [w, n] : d.m)
          c.expect(ce && (w.r + 2 * w.s - *ce) % (p - 1) == 0, tag + ": factor central character");
        ++compared;
      }
  }
  c.expect(weights == 2 + 6 + 20, "weight count");
  c.note << "weights=" << weights << " oracle_comparisons=" << compared;
}

// ---------------------------------------------------------------- 9

void ledger_check(Check& c) {
  int p = 3;
  BrauerTable t(p);
  Field k = Field::prime(p);
  Field f2 = Field::prime(2);
  std::vector<std::string> amb = {"a", "b"};
  for (int b : {2, 4}) {
    HodgeType w{0, b, InertialType{}};
    std::map<SerreWeight, Cycle> C1, C2;
    // unit cycles: alternate components between the two sides
    MultiplicityTable oracle_m = oracle::composition_factors(k, oracle::sym_module(k, b - 1, 0));
    int i = 0;
    for (const auto& [sw, n] : oracle_m) {
      C1[sw] = io::parse_cycle(i % 2 ? "[(b)]" : "[(a)]", amb, 1);
      C2[sw] = io::parse_cycle(i % 2 ? "[(a)]" : "[(b)]", amb, 1);
      ++i;
    }
    LedgerReport r = ledger(t, w, true, C1, C2);
    std::string tag = "w=(0," + std::to_string(b) + ")";
    c.expect(r.m == oracle_m, tag + ": multiplicities");

    std::vector<std::string> big = {"a", "b", "x", "y"};
    Cycle rhs{big, 2, {}};
    long long e_total = 0;
    for (const auto& [sw, n] : oracle_m)
      for (const auto& [side, var] : {std::pair{&C1, "x"}, std::pair{&C2, "y"}}) {
        MonomialQuotient q = realize(side->at(sw)).embedded(big);
        q = q.with({mono_var(static_cast<int>(std::find(big.begin(), big.end(), var) - big.begin()))});
        Cycle part = cycle_of(q, 2);
        for (const auto& [lab, mult] : part.terms) rhs.terms[lab] += n * mult;
        e_total += n * hilbert_samuel(q.to_ring(f2, 10), 10).mult;
      }
    c.expect(r.rhs == rhs, tag + ": RHS " + r.rhs.format() + " vs " + rhs.format());
    c.expect(r.e_total == e_total, tag + ": e-total");
    c.note << tag << " e=" << r.e_total << " ";
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "GMA structure", 5, gma_structure},
      {2, "block modules", 5, block_modules},
      {3, "tangent exactness", 30, tangent_exactness_check},
      {4, "endomorphisms and centre", 10, endo_centre},
      {5, "versal model", 10, versal_model},
      {6, "commutative-algebra ledger", 10, commutative_ledger},
      {7, "cycle calculus", 10, cycle_calculus},
      {8, "Serre weights", 60, serre_weights},
      {9, "ledger", 5, ledger_check},
  };
  int failed = 0;
  for (const auto& cr : all) {
    Check c;
    auto t0 = Clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    c.expect(dt < cr.limit, "runtime limit");
    std::printf("criterion %d %-28s %s  %7.3f s (limit %g s)  %s\n", cr.id, cr.name, c.pass ? "PASS" : "FAIL", dt,
                cr.limit, c.note.str().c_str());
    for (const auto& f : c.failures) std::printf("    failed: %s\n", f.c_str());
    failed += !c.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
