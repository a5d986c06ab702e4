// Command line front end.
//
//   beck relations|groebner|normal|poincare|check|dorofeev|repro [options]
//
// Exit status: 0 ok, 1 computation failed or not certified, 2 bad input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "beck/beck.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string field = "Q";
  std::string variety = "alt";
  std::string equation_file;
  std::string algebra = "abelian:2";
  std::string algebra_file;
  std::size_t max_weight = 0;
  unsigned threads = 1;
  std::string format = "text";
  std::uint64_t seed = 20240601;
  bool q_form = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--field", o.field, "Q or Fp:<prime>");
  cmd->add_option("--variety", o.variety, "built-in variety name");
  cmd->add_option("--equation-file", o.equation_file, "file with one equation per line");
  cmd->add_option("--algebra", o.algebra, "abelian:<n>, complex, quaternion, octonion, magma3, file:<path>, magma:<path>");
  cmd->add_option("--algebra-file", o.algebra_file, "structure constants JSON file");
  cmd->add_option("--max-weight", o.max_weight, "completion weight cap (default 2*rank+2)");
  cmd->add_option("--threads", o.threads, "reduction threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_flag("--q-form", o.q_form, "print l_i as q_i = l_i + r_i");
}

beck::SessionConfig to_config(const Options& o) {
  beck::SessionConfig cfg;
  cfg.field = beck::FieldSpec::parse(o.field);
  cfg.variety = o.variety;
  if (!o.equation_file.empty()) cfg.equation_file = o.equation_file;
  cfg.algebra = o.algebra;
  if (!o.algebra_file.empty()) cfg.algebra_file = o.algebra_file;
  if (o.max_weight) cfg.max_weight = o.max_weight;
  cfg.threads = o.threads;
  cfg.json = o.format == "json";
  cfg.seed = o.seed;
  cfg.q_form = o.q_form;
  return cfg;
}

void emit(const beck::SessionConfig& cfg, const beck::Json& j, const std::string& text) {
  if (cfg.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_repro(unsigned threads, const std::string& expected_path) {
  const auto lines = beck::repro_lines(threads);
  if (expected_path.empty()) {
    for (const auto& l : lines) std::cout << l << "\n";
    return kOk;
  }
  std::ifstream in(expected_path);
  if (!in) throw beck::BadStructureFile("cannot open " + expected_path);
  std::vector<std::string> expected;
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) expected.push_back(l);
  int status = kOk;
  for (std::size_t i = 0; i < std::max(lines.size(), expected.size()); ++i) {
    const std::string got = i < lines.size() ? lines[i] : "<missing>";
    const std::string want = i < expected.size() ? expected[i] : "<missing>";
    if (got == want) {
      std::cout << "ok    " << got << "\n";
    } else {
      std::cout << "DIFF  " << got << "\n      expected " << want << "\n";
      status = kFailed;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal enveloping algebras of varieties of algebras"};
  app.require_subcommand(1);
  Options o;
  std::optional<std::size_t> weight;
  std::size_t dorofeev_n = 4;
  std::size_t trials = 0;
  std::string expected;

  auto* relations = app.add_subcommand("relations", "print the interreduced defining relations");
  auto* groebner = app.add_subcommand("groebner", "complete to a Groebner basis and report the series");
  auto* normal = app.add_subcommand("normal", "list normal words");
  auto* poincare = app.add_subcommand("poincare", "print the Poincare polynomial");
  auto* check = app.add_subcommand("check", "test the algebra against the variety's equations");
  auto* dorofeev = app.add_subcommand("dorofeev", "solvable but not nilpotent witness in the extension");
  auto* repro = app.add_subcommand("repro", "run the reproduction table");
  for (auto* cmd : {relations, groebner, normal, poincare, check, dorofeev, repro}) add_common(cmd, o);
  normal->add_option("--weight", weight, "only this weight");
  dorofeev->add_option("--n", dorofeev_n, "rank of the abelian base")->check(CLI::Range(2, 12));
  dorofeev->add_option("--trials", trials, "random quadruples for the solvability check");
  repro->add_option("--expected", expected, "compare against this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    const beck::SessionConfig cfg = to_config(o);
    if (*repro) return cmd_repro(cfg.threads, expected);

    if (*check) {
      const beck::Variety v = beck::resolve_variety(cfg);
      const beck::StructureAlgebra alg = beck::resolve_algebra(cfg);
      const auto outcomes = beck::run_check(v, alg);
      emit(cfg, beck::check_json(cfg, v, alg, outcomes), beck::check_text(v, alg, outcomes));
      for (const auto& out : outcomes)
        if (!out.report.holds()) return kFailed;
      return kOk;
    }

    if (*dorofeev) {
      const auto ctx = beck::dorofeev_context(dorofeev_n, cfg.field, cfg.threads);
      const beck::ExtensionElement w = beck::dorofeev_witness(dorofeev_n, *ctx);
      beck::Json j;
      j["field"] = cfg.field.to_string();
      j["n"] = dorofeev_n;
      j["witness"] = w.to_string();
      std::ostringstream text;
      text << "witness " << w.to_string() << "\n";
      int status = kOk;
      if (trials) {
        const auto rep = beck::solvability_check(*ctx, trials, cfg.seed);
        j["solvability"] = {{"trials", rep.trials}, {"failures", rep.failures}, {"seed", cfg.seed}};
        text << "solvability (uv)(xy) = 0: " << rep.trials - rep.failures << "/" << rep.trials << " passed\n";
        if (!rep.passed()) status = kFailed;
      }
      emit(cfg, j, text.str());
      return status;
    }

    if (*relations) {
      const beck::Computation c = beck::prepare(cfg);
      if (c.relations.extraction_warning) std::cerr << "warning: " << *c.relations.extraction_warning << "\n";
      emit(cfg, beck::relations_json(cfg, c), beck::relations_text(cfg, c));
      return kOk;
    }

    const beck::Computation c = beck::run_groebner(cfg);
    if (c.relations.extraction_warning) std::cerr << "warning: " << *c.relations.extraction_warning << "\n";
    if (*groebner) {
      emit(cfg, beck::groebner_json(cfg, c), beck::groebner_text(cfg, c));
    } else if (*normal) {
      emit(cfg, beck::normal_json(cfg, c, weight), beck::normal_text(c, weight));
    } else {
      const beck::PoincareSeries ps = beck::poincare(*c.state);
      beck::Json j = beck::relations_json(cfg, c);
      j.erase("relations");
      j["certificate"] = beck::certificate_json(*c.state);
      j["poincare"] = beck::poincare_json(ps);
      emit(cfg, j, beck::poincare_text(ps));
    }
    return kOk;
  } catch (const beck::NotCertified& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const beck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
