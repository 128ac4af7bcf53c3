#include "jgpt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jgpt/suites.hpp"

namespace jgpt {

namespace {

std::uint64_t resolve_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("JORDAN_GPT_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return cli_seed;
}

int emit(const Report& rep, const std::string& out_path) {
  std::cout << rep.summary_lines();
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << rep.to_string();
  }
  return rep.overall_pass() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"jgpt: probabilistic-model and Jordan-algebra check suites"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::string out_path;
  app.add_option("--seed", seed, "RNG seed (env JORDAN_GPT_SEED overrides)");
  app.add_option("--tol", tol, "default tolerance for report-level checks");
  app.add_option("--out", out_path, "write the JSON report to this file");

  auto* model_cmd = app.add_subcommand("model", "model descriptor operations");
  std::string validate_file;
  auto* validate_cmd =
      model_cmd->add_subcommand("validate", "parse and validate a descriptor");
  validate_cmd->add_option("file", validate_file, "descriptor JSON")
      ->required();

  auto* check_cmd = app.add_subcommand("check", "run a named check suite");
  std::string check_name;
  std::string check_file;
  check_cmd
      ->add_option("suite", check_name,
                   "sharpness|spectrality|conjugate|selfdual|filters")
      ->required();
  check_cmd->add_option("file", check_file, "descriptor JSON")->required();

  auto* theorem_cmd =
      app.add_subcommand("theorem", "verify one of the main statements");
  std::string theorem_name;
  std::string kind;
  int rank = 0;
  theorem_cmd->add_option("name", theorem_name, "lemma1|lemma2|thm1|thm2|thm3")
      ->required();
  theorem_cmd->add_option("--kind", kind,
                          "real|complex|quaternionic|spin (default: all)");
  theorem_cmd->add_option("--rank", rank, "restrict to one rank");

  auto* demo_cmd = app.add_subcommand("demo", "built-in demonstrations");
  std::string demo_name;
  demo_cmd->add_option("name", demo_name, "gbit")->required();

  auto* report_cmd =
      app.add_subcommand("report", "run every suite and write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  SuiteOptions opt;
  opt.seed = resolve_seed(seed);
  opt.tol = tol;

  try {
    if (validate_cmd->parsed()) {
      Model m = build_model(load_descriptor(validate_file));
      Report rep = suite_model_validate(m, opt);
      return emit(rep, out_path);
    }
    if (check_cmd->parsed()) {
      Model m = build_model(load_descriptor(check_file));
      Report rep;
      if (check_name == "sharpness") {
        rep = suite_sharpness(m, opt);
      } else if (check_name == "spectrality") {
        rep = suite_spectrality(m, opt);
      } else if (check_name == "conjugate") {
        rep = suite_conjugate(m, opt);
      } else if (check_name == "selfdual") {
        rep = suite_selfdual(m, opt);
      } else if (check_name == "filters") {
        rep = suite_filters(m, opt);
      } else {
        std::cerr << "error: unknown check suite '" << check_name << "'\n";
        return 2;
      }
      return emit(rep, out_path);
    }
    if (theorem_cmd->parsed()) {
      Report rep;
      if (theorem_name == "thm3") {
        rep = suite_thm3(opt);
      } else {
        std::vector<Model> models = zoo_filter(kind, rank);
        if (theorem_name == "lemma1") {
          rep = suite_lemma1(models, opt);
        } else if (theorem_name == "lemma2") {
          rep = suite_lemma2(models, opt);
        } else if (theorem_name == "thm1") {
          rep = suite_thm1(models, opt);
        } else if (theorem_name == "thm2") {
          rep = suite_thm2(models, opt);
        } else {
          std::cerr << "error: unknown theorem '" << theorem_name << "'\n";
          return 2;
        }
      }
      return emit(rep, out_path);
    }
    if (demo_cmd->parsed()) {
      if (demo_name != "gbit") {
        std::cerr << "error: unknown demo '" << demo_name << "'\n";
        return 2;
      }
      Report rep = suite_gbit_demo(opt);
      return emit(rep, out_path);
    }
    if (report_cmd->parsed()) {
      Report rep = full_report(opt);
      return emit(rep, out_path);
    }
  } catch (const DescriptorError& e) {
    std::cerr << "descriptor error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}

}  // namespace jgpt
