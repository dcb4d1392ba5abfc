#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "versalkit/io.hpp"
#include "versalkit/runner.hpp"

namespace fs = std::filesystem;
using namespace vk;
using nlohmann::json;

namespace {

struct Globals {
  std::string json_out;
  bool timing = false;
};

std::string existing(const std::string& path) {
  if (fs::is_regular_file(path)) return path;
  std::string root = io::fixture_root();
  if (!root.empty() && fs::is_regular_file(fs::path(root) / path)) return (fs::path(root) / path).string();
  throw io::ParseError(path, 0, 0, "no such file");
}

int emit(const Globals& g, const json& j) {
  std::string text = j.dump(2) + "\n";
  if (g.json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.json_out);
    if (!out) {
      std::cerr << "cannot write " << g.json_out << "\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

cli::Scenario synthetic(cli::Kind kind, const std::string& id) {
  cli::Scenario s;
  s.kind = kind;
  s.id = id;
  s.doc.path = "<command line>";
  return s;
}

int finish(const Globals& g, const cli::Scenario& s) {
  cli::validate_scenario(s);
  cli::Report r = cli::run(s);
  int rc = emit(g, cli::to_json(r, g.timing));
  return rc != 0 ? rc : cli::exit_code(r);
}

std::string doc_kind(const std::string& path) {
  io::TextDoc d = io::read_doc(path);
  if (d.section("pair")) return "pair";
  if (d.section("ring")) return "ring";
  throw io::ParseError(path, 1, 1, "expected a [ring] or [pair] file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite models of determinants, Cayley-Hamilton algebras and deformation-ring bookkeeping"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--json", g.json_out, "write the JSON report to this file instead of stdout");
  app.add_flag("--timing", g.timing, "include wall-clock timing in reports");
  app.set_version_flag("--version", std::string(cli::kToolVersion));

  std::string model, ring, pair, file, tau = "trivial", w;
  int N = -1, p = 0;
  bool crystalline = false;

  auto* model_cmd = app.add_subcommand("model", "group models");
  model_cmd->require_subcommand(1);
  auto* model_check = model_cmd->add_subcommand("check", "Ext dimensions and genericity of a model file");
  model_check->add_option("model", model)->required();

  auto* ch_cmd = app.add_subcommand("ch", "Cayley-Hamilton algebras");
  ch_cmd->require_subcommand(1);
  auto* ch_build = ch_cmd->add_subcommand("build", "build CH(A) for the split determinant or a pair file");
  ch_build->add_option("model", model)->required();
  ch_build->add_option("--coeff", ring, "coefficient ring file");
  ch_build->add_option("--pair", pair, "determinant pair file");

  auto* tangent_cmd = app.add_subcommand("tangent", "tangent space and exactness of the tangent sequence");
  tangent_cmd->add_option("model", model)->required();

  auto* det_cmd = app.add_subcommand("det", "determinants");
  det_cmd->require_subcommand(1);
  auto* det_validate = det_cmd->add_subcommand("validate", "check the determinant axioms of a pair file");
  det_validate->add_option("pair", pair)->required();

  auto* hs_cmd = app.add_subcommand("hs", "Hilbert-Samuel data of a ring file");
  hs_cmd->add_option("ring", ring)->required();
  hs_cmd->add_option("--N", N, "truncation degree");

  auto* versal_cmd = app.add_subcommand("versal", "matrix model over A[[x,y]]/(xy - c)");
  versal_cmd->add_option("model", model)->required();
  versal_cmd->add_option("coeff", file, "ring file (split determinant) or pair file")->required();
  versal_cmd->add_option("--N", N, "truncation degree");

  auto* cycles_cmd = app.add_subcommand("cycles", "cycle calculus on a scenario file");
  cycles_cmd->add_option("scenario", file)->required();

  auto* weights_cmd = app.add_subcommand("weights", "Serre weight multiplicities of sigma(w, tau)");
  weights_cmd->add_option("--p", p)->required();
  weights_cmd->add_option("--w", w, "Hodge type a,b")->required();
  weights_cmd->add_option("--tau", tau, "trivial | steinberg:k | principal:k1,k2");
  weights_cmd->add_flag("--crystalline", crystalline);

  auto* ledger_cmd = app.add_subcommand("ledger", "assemble the weighted cycle of a ledger scenario");
  ledger_cmd->add_option("scenario", file)->required();
  ledger_cmd->add_option("--p", p);
  ledger_cmd->add_flag("--crystalline", crystalline);

  auto* run_cmd = app.add_subcommand("run", "run one scenario file of any kind");
  run_cmd->add_option("scenario", file)->required();

  auto* suite_cmd = app.add_subcommand("suite", "run every scenario in a directory");
  suite_cmd->add_option("directory", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (model_check->parsed()) {
      auto s = synthetic(cli::Kind::ModelCheck, fs::path(model).stem().string());
      s.refs["model"] = existing(model);
      return finish(g, s);
    }
    if (ch_build->parsed()) {
      auto s = synthetic(cli::Kind::ChBuild, fs::path(model).stem().string());
      s.refs["model"] = existing(model);
      if (!ring.empty()) s.refs["ring"] = existing(ring);
      if (!pair.empty()) s.refs["pair"] = existing(pair);
      return finish(g, s);
    }
    if (tangent_cmd->parsed()) {
      auto s = synthetic(cli::Kind::Tangent, fs::path(model).stem().string());
      s.refs["model"] = existing(model);
      return finish(g, s);
    }
    if (det_validate->parsed()) {
      auto s = synthetic(cli::Kind::DetValidate, fs::path(pair).stem().string());
      s.refs["pair"] = existing(pair);
      return finish(g, s);
    }
    if (hs_cmd->parsed()) {
      auto s = synthetic(cli::Kind::Hs, fs::path(ring).stem().string());
      s.refs["ring"] = existing(ring);
      if (N > 0) s.options["N"] = std::to_string(N);
      return finish(g, s);
    }
    if (versal_cmd->parsed()) {
      auto s = synthetic(cli::Kind::Versal, fs::path(model).stem().string());
      s.refs["model"] = existing(model);
      std::string coeff = existing(file);
      s.refs[doc_kind(coeff)] = coeff;
      if (N > 0) s.options["N"] = std::to_string(N);
      return finish(g, s);
    }
    if (weights_cmd->parsed()) {
      auto s = synthetic(cli::Kind::Weights, "weights");
      s.options = {{"p", std::to_string(p)}, {"w", w}, {"tau", tau}, {"crystalline", crystalline ? "true" : "false"}};
      return finish(g, s);
    }
    if (cycles_cmd->parsed() || ledger_cmd->parsed() || run_cmd->parsed()) {
      cli::Scenario s = cli::parse_scenario(existing(file));
      if (cycles_cmd->parsed() && s.kind != cli::Kind::Cycles)
        throw io::ParseError(file, 1, 1, "not a cycles scenario");
      if (ledger_cmd->parsed()) {
        if (s.kind != cli::Kind::Ledger) throw io::ParseError(file, 1, 1, "not a ledger scenario");
        if (p > 0) s.options["p"] = std::to_string(p);
        if (crystalline) s.options["crystalline"] = "true";
      }
      return finish(g, s);
    }
    if (suite_cmd->parsed()) {
      if (!fs::is_directory(file)) throw io::ParseError(file, 0, 0, "not a directory");
      cli::SuiteReport r = cli::regression_suite(file);
      int rc = emit(g, cli::to_json(r, g.timing));
      return rc != 0 ? rc : (r.pass() ? 0 : 1);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
