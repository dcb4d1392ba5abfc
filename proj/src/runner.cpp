#include "versalkit/runner.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>

#include "versalkit/algebra.hpp"
#include "versalkit/cycles.hpp"
#include "versalkit/determinants.hpp"
#include "versalkit/local_ops.hpp"
#include "versalkit/weights.hpp"

namespace vk::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::vector<std::pair<Kind, std::string>>& kind_table() {
  static const std::vector<std::pair<Kind, std::string>> t = {
      {Kind::ModelCheck, "model-check"}, {Kind::ChBuild, "ch-build"}, {Kind::Tangent, "tangent"},
      {Kind::DetValidate, "det-validate"}, {Kind::Hs, "hs"},       {Kind::Versal, "versal"},
      {Kind::Cycles, "cycles"},            {Kind::Weights, "weights"}, {Kind::Ledger, "ledger"}};
  return t;
}

json elem_json(const LocalRing& R, const LocalRing::Elem& a) {
  return {{"coeffs", a}, {"text", R.format(a)}};
}

json ring_json(const LocalRing& R) {
  json gens = json::array();
  for (const auto& g : R.generators()) gens.push_back(format_poly(g, R.vars(), R.field()));
  return {{"field_size", R.field().size()}, {"vars", R.vars()}, {"relations", gens},
          {"truncation", R.truncation()},  {"dim_over_k", R.dim()}, {"basis", R.basis_labels()}};
}

json hs_json(const HilbertSamuelData& h) {
  return {{"lengths", h.lengths}, {"dim", h.dim}, {"mult", h.mult}, {"stableFrom", h.stable_from}};
}

json cycle_json(const Cycle& c) {
  json terms = json::array();
  for (const auto& P : c.support()) terms.push_back({{"prime", P.format()}, {"mult", c.terms.at(P.vars)}});
  return {{"ambient", c.ambient}, {"dim", c.dim}, {"terms", terms}, {"text", c.format()}};
}

json diff_json(const CycleDiff& d) {
  json entries = json::array();
  for (const auto& [p, l, r] : d.entries) entries.push_back({{"prime", p}, {"lhs", l}, {"rhs", r}});
  return {{"equal", d.equal}, {"entries", entries}};
}

json table_json(const MultiplicityTable& m) {
  json out = json::array();
  for (const auto& [w, c] : m) out.push_back({{"weight", {w.r, w.s}}, {"mult", c}});
  return out;
}

std::string option(const Scenario& s, const std::string& key, const std::string& fallback = "") {
  auto it = s.options.find(key);
  return it == s.options.end() ? fallback : it->second;
}

bool has_option(const Scenario& s, const std::string& key) { return s.options.count(key) > 0; }

int int_option(const Scenario& s, const std::string& key, int fallback) {
  if (!has_option(s, key)) return fallback;
  std::string v = option(s, key);
  size_t used = 0;
  int r = 0;
  try {
    r = std::stoi(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw std::invalid_argument("option " + key + " expects an integer, got '" + v + "'");
  return r;
}

bool bool_option(const Scenario& s, const std::string& key) {
  std::string v = option(s, key, "false");
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw std::invalid_argument("option " + key + " expects true or false, got '" + v + "'");
}

std::vector<std::string> list_of(const io::Section& s, const std::string& key) {
  const io::Entry* e = s.find(key);
  return e ? io::split_list(e->value) : std::vector<std::string>{};
}

SerreWeight parse_weight(const std::string& text) {
  auto parts = io::split_list(text);
  if (parts.size() != 2) throw std::invalid_argument("weight '" + text + "' is not 'a,b'");
  return {std::stoi(parts[0]), std::stoi(parts[1])};
}

// --- per-kind evaluation ---

Report model_check(const Scenario& s) {
  GroupModel m = io::load_model(s.refs.at("model"));
  Report r;
  auto errors = validate_model(m);
  GenericityReport g = genericity_check(m);
  r.payload = {{"name", m.name},
               {"order", m.G->order()},
               {"p", m.p},
               {"field_size", m.k.size()},
               {"validation_errors", errors},
               {"ext_dims", {{g.ext[0][0], g.ext[0][1]}, {g.ext[1][0], g.ext[1][1]}}},
               {"genericity", {{"pass", g.pass}, {"reasons", g.reasons}}}};
  r.pass = errors.empty() && g.pass;
  return r;
}

struct Loaded {
  std::shared_ptr<const GroupModel> model;
  DeterminantPair det;
  std::string source;
};

// model with a split pair over the ring, or an explicit pair file
Loaded load_det(const Scenario& s) {
  Loaded l;
  if (s.refs.count("pair")) {
    io::PairSpec p = io::load_pair(s.refs.at("pair"));
    l.model = p.model;
    l.det = p.det;
    l.source = "pair:" + p.kind;
    return l;
  }
  l.model = std::make_shared<const GroupModel>(io::load_model(s.refs.at("model")));
  RingPtr R;
  if (s.refs.count("ring")) {
    io::RingSpec spec = io::load_ring(s.refs.at("ring"));
    if (!(spec.ring.field() == l.model->k)) throw std::invalid_argument("ring field differs from the model field");
    R = std::make_shared<const LocalRing>(spec.ring);
  } else {
    R = std::make_shared<const LocalRing>(LocalRing::residue_field(l.model->k));
  }
  l.det = split_pair(*l.model, R);
  l.source = "split";
  return l;
}

Report ch_build(const Scenario& s) {
  Loaded l = load_det(s);
  const GroupModel& m = *l.model;
  const LocalRing& R = *l.det.A;
  auto GA = std::make_shared<const AssocAlgebra>(AssocAlgebra::group_algebra(m.G, l.det.A));
  ChAlgebra ch = ch_quotient(GA, l.det);
  const AssocAlgebra& A = ch.alg();
  Vec e1 = character_idempotent(A, m.H, m.chi1), e2 = character_idempotent(A, m.H, m.chi2);
  Peirce pe = peirce_decomposition(A, e1, e2);
  auto rank = free_rank(A);
  bool assoc = !A.associativity_failure().found;
  Report r;
  r.payload = {{"model", m.name},
               {"det", l.source},
               {"ring", ring_json(R)},
               {"dim_over_k", A.dim()},
               {"dim", rank ? json(*rank) : json(nullptr)},
               {"associative", assoc},
               {"blocks", {{pe.dim(0, 0), pe.dim(0, 1)}, {pe.dim(1, 0), pe.dim(1, 1)}}}};
  json centre_basis = json::array();
  auto z = centre(A);
  for (const auto& v : z) centre_basis.push_back(A.format(v));
  r.payload["centre"] = centre_basis;
  bool frame_ok = false;
  try {
    GmaFrame f = gma_frame(A, e1, e2, ch.trace_fn());
    json rels = json::object();
    for (const auto& [name, ok] : f.relations) rels[name] = ok;
    auto zz = gma_centre(A, f);
    json pred = json::array();
    for (const auto& v : zz) pred.push_back(A.format(v));
    frame_ok = f.relations_hold();
    r.payload["frame"] = {{"relations", rels}, {"pass", frame_ok}, {"c", elem_json(R, f.c)}};
    r.payload["gma_centre"] = pred;
    r.payload["centre_matches_gma_formula"] = same_span(m.k, z, zz, A.dim());
  } catch (const FrameError& ex) {
    r.payload["frame"] = {{"pass", false}, {"error", ex.what()}};
  }
  r.pass = assoc && pe.complete && frame_ok && rank && *rank == 4;
  return r;
}

Report tangent(const Scenario& s) {
  GroupModel m = io::load_model(s.refs.at("model"));
  TangentSpace ts = tangent_space(m);
  ExactnessReport ex = tangent_exactness(m);
  json basis = json::array();
  for (const auto& v : ts.basis) basis.push_back({{"t1", v.t1}, {"d1", v.d1}});
  Report r;
  r.payload = {{"model", m.name},
               {"dim", ts.dim()},
               {"basis", basis},
               {"ext_dims", {{ex.ext[0][0], ex.ext[0][1]}, {ex.ext[1][0], ex.ext[1][1]}}},
               {"first_arrow_rank", ex.image_dim},
               {"last_arrow_rank", ex.dim - ex.kernel_dim},
               {"kernel_dim", ex.kernel_dim},
               {"lambdas", ex.lambdas},
               {"frame_failures", ex.frame_failures},
               {"kernel_equals_image", ex.kernel_equals_image},
               {"sandwich", ex.sandwich},
               {"lambda_linear", ex.lambda_linear}};
  r.pass = ex.kernel_equals_image && ex.sandwich && ex.lambda_linear;
  return r;
}

Report det_validate(const Scenario& s) {
  io::PairSpec p = io::load_pair(s.refs.at("pair"));
  DetReport d = validate(p.det, p.model.get());
  const FiniteGroup& G = *p.model->G;
  Report r;
  r.payload = {{"model", p.model->name}, {"kind", p.kind}, {"ring", ring_json(*p.det.A)}, {"pass", d.pass}};
  if (!d.pass) {
    json w = {{"axiom", d.axiom}, {"detail", d.detail}};
    w["g"] = d.g >= 0 ? json(G.name(d.g)) : json(nullptr);
    w["h"] = d.h >= 0 ? json(G.name(d.h)) : json(nullptr);
    r.payload["witness"] = w;
  }
  r.pass = d.pass;
  return r;
}

Report hs(const Scenario& s) {
  io::RingSpec spec = io::load_ring(s.refs.at("ring"));
  int N = int_option(s, "N", std::max(spec.ring.truncation(), kDefaultTruncation));
  LocalRing R = retruncate(spec.ring, N);
  Report r;
  r.pass = true;
  r.payload = {{"ring", ring_json(spec.ring)}, {"N", R.truncation()}};
  try {
    HilbertSamuelData h = hilbert_samuel(R, R.truncation());
    r.payload.update(hs_json(h));
    if (has_option(s, "expect_dim")) r.pass = r.pass && h.dim == int_option(s, "expect_dim", 0);
    if (has_option(s, "expect_mult")) r.pass = r.pass && h.mult == int_option(s, "expect_mult", 0);
  } catch (const TruncationError& ex) {
    r.payload["hs"] = {{"error", ex.what()}, {"suggested_N", ex.suggested_N}};
    r.pass = false;
  }
  if (spec.ring.is_monomial()) r.payload["reduced"] = is_reduced_monomial(spec.ring);
  if (spec.adjoin_c) {
    LocalRing::Elem c = spec.ring.parse(*spec.adjoin_c);
    AdjoinResult ad = adjoin_xy_minus_c(spec.ring, c, N, spec.x, spec.y);
    FreeOverZReport fz = free_over_z_check(spec.ring, *ad.B, spec.x, spec.y);
    r.payload["adjoin"] = {{"c", elem_json(spec.ring, c)},
                           {"B", ring_json(*ad.B)},
                           {"hs_A", hs_json(ad.hs_A)},
                           {"hs_B", hs_json(ad.hs_B)},
                           {"dim_ok", ad.dim_ok},
                           {"free_over_z",
                            {{"pass", fz.pass},
                             {"checked_degree", fz.checked_degree},
                             {"failure_degree", fz.failure_degree},
                             {"counterexample", fz.counterexample}}}};
    r.pass = r.pass && ad.dim_ok && fz.pass;
  }
  if (spec.control_prime) {
    LocalRing::Elem c = spec.ring.parse(spec.control_c);
    ControlCycleReport cc = control_cycle_check(spec.ring, *spec.control_prime, c, N);
    r.payload["control_cycle"] = {{"prime", *spec.control_prime},
                                  {"c", elem_json(spec.ring, c)},
                                  {"hypothesis", cc.hypothesis},
                                  {"c_in_p", cc.c_in_p},
                                  {"dim_A", cc.dim_A},
                                  {"dim_Bq", cc.dim_Bq},
                                  {"e_Ap", cc.e_Ap},
                                  {"e_Bq", cc.e_Bq},
                                  {"len_Ap", cc.len_Ap},
                                  {"len_Bq", cc.len_Bq},
                                  {"pass", cc.pass()}};
    r.pass = r.pass && cc.pass();
  }
  return r;
}

json tri_json(const TriangularReport& t) {
  return {{"triangular", t.triangular}, {"diagonal_residual", t.diagonal_residual}, {"nonsplit", t.nonsplit},
          {"pass", t.pass()}};
}

Report versal(const Scenario& s) {
  Loaded l = load_det(s);
  const GroupModel& m = *l.model;
  int N = int_option(s, "N", kDefaultTruncation);
  VersalModel v = versal_matrix_model(m, l.det, N);
  Report r;
  r.payload = {{"model", m.name},
               {"det", l.source},
               {"A", ring_json(*l.det.A)},
               {"c", elem_json(*l.det.A, v.c)},
               {"multiplicative", v.multiplicative},
               {"trace_det_ok", v.trace_det_ok},
               {"ch_identity", v.ch_identity},
               {"h_diagonal", v.h_diagonal},
               {"failure", v.failure}};
  r.pass = v.pass();
  if (!v.B) return r;
  r.payload["B"] = ring_json(*v.B);
  json images = json::object();
  for (const auto& [name, g] : m.named) {
    json mat = json::array();
    for (const auto& e : v.rho.images[g]) mat.push_back(elem_json(*v.B, e));
    images[name] = mat;
  }
  r.payload["generator_images"] = images;
  FreeOverZReport fz = free_over_z_check(*l.det.A, *v.B);
  r.payload["free_over_z"] = {{"pass", fz.pass}, {"checked_degree", fz.checked_degree}};
  r.pass = r.pass && fz.pass;
  if (l.det.A->dim() == 1) {
    TriangularReport up = triangular_type(m, specialize_zero(v.rho, "x"), true, "y");
    TriangularReport lo = triangular_type(m, specialize_zero(v.rho, "y"), false, "x");
    r.payload["x_zero"] = tri_json(up);
    r.payload["y_zero"] = tri_json(lo);
    r.pass = r.pass && up.pass() && lo.pass();
  }
  return r;
}

Report cycles(const Scenario& s) {
  const io::TextDoc& doc = s.doc;
  const io::Section& cs = doc.require("cycles");
  std::string mode = doc.require(cs, "mode").value;
  auto vars = list_of(cs, "vars");
  auto ideal = [&](const std::string& key) { return MonomialQuotient::parse(vars, list_of(cs, key)); };
  auto dim = [&] { return static_cast<int>(io::parse_integer(doc, doc.require(cs, "d"))); };
  Report r;
  r.payload = {{"mode", mode}};
  if (mode == "cycle" || mode == "cut") {
    MonomialQuotient A = ideal("ideal");
    int d = dim();
    Cycle z = mode == "cycle" ? cycle_of(A, d) : cut_by_regular(A, doc.require(cs, "var").value, d);
    json primes = json::array();
    for (const auto& P : minimal_primes(A)) primes.push_back(P.format());
    r.payload["ideal"] = A.format_ideal();
    r.payload["minimal_primes"] = primes;
    r.payload["cycle"] = cycle_json(z);
    r.pass = true;
    if (const io::Entry* e = cs.find("expect")) {
      CycleDiff d2 = diff_cycles(z, io::parse_cycle(e->value, z.ambient, z.dim));
      r.payload["diff"] = diff_json(d2);
      r.pass = d2.equal;
    }
    return r;
  }
  if (mode == "additivity") {
    std::optional<MonomialQuotient> I3;
    if (cs.find("I3")) I3 = ideal("I3");
    AdditivityReport a = additivity_check(ideal("I1"), ideal("I2"), I3, dim());
    std::string expect = cs.find("expect") ? cs.find("expect")->value : "additive";
    if (expect != "additive" && expect != "violation") doc.fail(*cs.find("expect"), "expect is additive or violation");
    r.payload["hypothesis"] = a.hypothesis;
    r.payload["additive"] = a.additive;
    r.payload["violations"] = a.violations;
    r.payload["lhs"] = cycle_json(a.lhs);
    r.payload["rhs"] = cycle_json(a.rhs);
    r.payload["expect"] = expect;
    r.pass = expect == "additive" ? a.pass() : (!a.hypothesis && !a.violations.empty());
    return r;
  }
  if (mode == "bm") {
    BmScenario b;
    b.base = list_of(cs, "base");
    if (cs.find("x")) b.x = cs.find("x")->value;
    if (cs.find("y")) b.y = cs.find("y")->value;
    b.relations = list_of(cs, "relations");
    if (cs.find("locus1")) b.locus1 = list_of(cs, "locus1");
    if (cs.find("locus2")) b.locus2 = list_of(cs, "locus2");
    if (cs.find("locus_irr")) b.locus_irr = list_of(cs, "locus_irr");
    b.r1 = list_of(cs, "r1");
    b.r2 = list_of(cs, "r2");
    b.d = dim();
    BmReport bm = bm_cycle_identity(b);
    r.payload["shape_ok"] = bm.shape_ok;
    r.payload["shape_errors"] = bm.shape_errors;
    r.payload["lhs"] = cycle_json(bm.lhs);
    r.payload["rhs"] = cycle_json(bm.rhs);
    r.payload["diff"] = diff_json(bm.diff);
    r.payload["e_lhs"] = bm.e_lhs;
    r.payload["e_rhs"] = bm.e_rhs;
    r.pass = bm.pass();
    return r;
  }
  doc.fail(*cs.find("mode"), "unknown cycles mode '" + mode + "'");
}

Report weights(const Scenario& s) {
  int p = int_option(s, "p", 0);
  BrauerTable t(p);
  SerreWeight w = parse_weight(option(s, "w"));
  HodgeType hw{w.r, w.s, InertialType::parse(option(s, "tau", "trivial"))};
  bool cr = bool_option(s, "crystalline");
  BrauerCharacter f = sigma_character(t, hw, cr);
  Report r;
  r.payload = {{"p", p}, {"w", {hw.a, hw.b}}, {"tau", hw.tau.format()}, {"crystalline", cr}};
  try {
    Decomposition d = decompose(t, f);
    auto dim = t.dimension(f);
    r.payload["m_table"] = table_json(d.m);
    r.payload["dimension_sum"] = dimension_sum(d.m);
    r.payload["character_dimension"] = dim ? json(*dim) : json(nullptr);
    r.payload["central_exponent"] = d.central_exponent;
    r.pass = dim && *dim == dimension_sum(d.m);
  } catch (const NotBrauerCharacter& ex) {
    r.payload["error"] = ex.what();
    r.pass = false;
  }
  return r;
}

Report ledger_kind(const Scenario& s) {
  const io::TextDoc& doc = s.doc;
  const io::Section& ls = doc.require("ledger");
  auto ambient = list_of(ls, "ambient");
  int d = static_cast<int>(io::parse_integer(doc, doc.require(ls, "d")));
  int p = int_option(s, "p", 0);
  BrauerTable t(p);
  SerreWeight w = parse_weight(option(s, "w"));
  HodgeType hw{w.r, w.s, InertialType::parse(option(s, "tau", "trivial"))};
  bool cr = bool_option(s, "crystalline");
  auto read = [&](const std::string& name) {
    std::map<SerreWeight, Cycle> out;
    if (const io::Section* sec = doc.section(name))
      for (const auto& e : sec->entries) {
        try {
          out[parse_weight(e.key)] = io::parse_cycle(e.value, ambient, d);
        } catch (const std::exception& ex) {
          doc.fail(e, ex.what());
        }
      }
    return out;
  };
  auto C1 = read("C1"), C2 = read("C2");
  std::optional<Cycle> claimed;
  if (const io::Section* cl = doc.section("claim")) {
    const io::Entry& e = doc.require(*cl, "cycle");
    auto amb = ambient;
    amb.push_back("x");
    amb.push_back("y");
    try {
      claimed = io::parse_cycle(e.value, amb, d + 1);
    } catch (const std::exception& ex) {
      doc.fail(e, ex.what());
    }
  }
  LedgerReport lr = ledger(t, hw, cr, C1, C2, claimed);
  Report r;
  r.payload = {{"p", p},
               {"w", {hw.a, hw.b}},
               {"tau", hw.tau.format()},
               {"crystalline", cr},
               {"m_table", table_json(lr.m)},
               {"rhs_cycle", cycle_json(lr.rhs)},
               {"e_total", lr.e_total},
               {"diff", lr.diff ? diff_json(*lr.diff) : json(nullptr)}};
  r.pass = lr.pass();
  return r;
}

}  // namespace

std::string kind_name(Kind k) {
  for (const auto& [kk, n] : kind_table())
    if (kk == k) return n;
  return "?";
}

const std::vector<std::string>& kind_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, n] : kind_table()) v.push_back(n);
    return v;
  }();
  return names;
}

Scenario scenario_from_doc(const io::TextDoc& doc, const std::string& id) {
  const io::Section& ss = doc.require("scenario");
  const io::Entry& ke = doc.require(ss, "kind");
  Scenario s;
  s.doc = doc;
  s.id = ss.find("id") ? ss.find("id")->value : id;
  bool known = false;
  for (const auto& [k, n] : kind_table())
    if (n == ke.value) {
      s.kind = k;
      known = true;
    }
  if (!known) doc.fail(ke, "unknown kind '" + ke.value + "'");
  for (const auto& e : ss.entries) {
    if (e.key == "kind" || e.key == "id") continue;
    if (e.key == "model" || e.key == "ring" || e.key == "pair")
      s.refs[e.key] = io::resolve_reference(doc, e);
    else
      doc.fail(e, "unknown scenario key '" + e.key + "'");
  }
  for (const char* data : {"options", "weights", "ledger"})
    if (const io::Section* os = doc.section(data))
      for (const auto& e : os->entries)
        if (std::string(data) == "options" || e.key == "p" || e.key == "w" || e.key == "tau" ||
            e.key == "crystalline")
          s.options[e.key] = e.value;
  validate_scenario(s);
  return s;
}

Scenario parse_scenario(const std::string& path) {
  io::TextDoc doc = io::read_doc(path);
  return scenario_from_doc(doc, fs::path(path).stem().string());
}

void validate_scenario(const Scenario& s) {
  auto need = [&](const std::string& ref) {
    if (!s.refs.count(ref)) throw io::ParseError(s.doc.path, 1, 1, kind_name(s.kind) + " needs a " + ref + " reference");
  };
  auto need_option = [&](const std::string& key) {
    if (!s.options.count(key))
      throw io::ParseError(s.doc.path, 1, 1, kind_name(s.kind) + " needs option '" + key + "'");
  };
  switch (s.kind) {
    case Kind::ModelCheck:
    case Kind::Tangent:
      need("model");
      break;
    case Kind::ChBuild:
    case Kind::Versal:
      if (!s.refs.count("pair")) need("model");
      break;
    case Kind::DetValidate:
      need("pair");
      break;
    case Kind::Hs:
      need("ring");
      break;
    case Kind::Cycles:
      s.doc.require("cycles");
      break;
    case Kind::Weights:
      need_option("p");
      need_option("w");
      break;
    case Kind::Ledger:
      s.doc.require("ledger");
      need_option("p");
      need_option("w");
      break;
  }
  if (s.refs.count("model")) io::load_model(s.refs.at("model"));
  if (s.refs.count("ring")) io::load_ring(s.refs.at("ring"));
  if (s.refs.count("pair")) io::read_doc(s.refs.at("pair"));
}

Report run(const Scenario& s) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  switch (s.kind) {
    case Kind::ModelCheck: r = model_check(s); break;
    case Kind::ChBuild: r = ch_build(s); break;
    case Kind::Tangent: r = tangent(s); break;
    case Kind::DetValidate: r = det_validate(s); break;
    case Kind::Hs: r = hs(s); break;
    case Kind::Versal: r = versal(s); break;
    case Kind::Cycles: r = cycles(s); break;
    case Kind::Weights: r = weights(s); break;
    case Kind::Ledger: r = ledger_kind(s); break;
  }
  r.id = s.id;
  r.kind = kind_name(s.kind);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

json to_json(const Report& r, bool timing) {
  json j = {{"scenario", r.id},
            {"kind", r.kind},
            {"verdict", !r.error.empty() ? "error" : (r.pass ? "pass" : "fail")},
            {"payload", r.payload},
            {"tool", {{"name", kToolName}, {"version", kToolVersion}}}};
  if (!r.error.empty()) j["error"] = r.error;
  if (timing) j["timing_us"] = static_cast<long long>(r.seconds * 1e6);
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.id = j.at("scenario").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.pass = j.at("verdict") == "pass";
  r.payload = j.at("payload");
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  if (j.contains("timing_us")) r.seconds = j.at("timing_us").get<long long>() / 1e6;
  return r;
}

SuiteReport regression_suite(const std::string& directory) {
  SuiteReport out;
  out.directory = directory;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(directory))
    if (e.is_regular_file() && e.path().extension() == ".ini") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  out.cases.resize(files.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < files.size(); ++i) {
    Report r;
    try {
      r = run(parse_scenario(files[i].string()));
    } catch (const std::exception& ex) {
      r.id = files[i].stem().string();
      r.kind = "unknown";
      r.pass = false;
      r.error = ex.what();
    }
    out.cases[i] = std::move(r);
  }
  std::stable_sort(out.cases.begin(), out.cases.end(), [](const Report& a, const Report& b) { return a.id < b.id; });
  out.vacuous = out.cases.empty();
  for (const auto& c : out.cases) out.failures += c.pass ? 0 : 1;
  return out;
}

json to_json(const SuiteReport& r, bool timing) {
  json cases = json::array();
  json failed = json::array();
  for (const auto& c : r.cases) {
    cases.push_back(to_json(c, timing));
    if (!c.pass) failed.push_back(c.id);
  }
  return {{"kind", "suite"},
          {"directory", fs::path(r.directory).filename().string()},
          {"cases", cases},
          {"count", r.cases.size()},
          {"failures", failed},
          {"vacuous", r.vacuous},
          {"verdict", r.pass() ? "pass" : "fail"},
          {"tool", {{"name", kToolName}, {"version", kToolVersion}}}};
}

int exit_code(const Report& r) {
  if (!r.error.empty()) return 2;
  return r.pass ? 0 : 1;
}

}  // namespace vk::cli
