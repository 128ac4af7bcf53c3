#pragma once

#include "jgpt/descriptor.hpp"
#include "jgpt/filter.hpp"
#include "jgpt/monoidal.hpp"
#include "jgpt/report.hpp"
#include "jgpt/sweep.hpp"

namespace jgpt {

struct SuiteOptions {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  Exec exec = default_exec();
};

// Jordan models exercised by the named suites: the four algebra families at
// desk-scale ranks.
std::vector<Model> standard_zoo();
// Restricts to one kind and/or rank when given ("" / 0 keep everything).
std::vector<Model> zoo_filter(const std::string& kind, int rank);

Report suite_model_validate(const Model& m, const SuiteOptions& opt);
Report suite_sharpness(const Model& m, const SuiteOptions& opt);
Report suite_spectrality(const Model& m, const SuiteOptions& opt);
Report suite_conjugate(const Model& m, const SuiteOptions& opt);
Report suite_selfdual(const Model& m, const SuiteOptions& opt);
Report suite_filters(const Model& m, const SuiteOptions& opt);

Report suite_algebra(const std::vector<Model>& models, const SuiteOptions& opt);
Report suite_lemma1(const std::vector<Model>& models, const SuiteOptions& opt);
Report suite_lemma2(const std::vector<Model>& models, const SuiteOptions& opt);
Report suite_thm1(const std::vector<Model>& models, const SuiteOptions& opt);
Report suite_thm2(const std::vector<Model>& models, const SuiteOptions& opt);
Report suite_thm3(const SuiteOptions& opt);

// The square-bit counterexample, reported as raw (expectedly failing)
// checks; `full_report` wraps the same facts as positive assertions.
Report suite_gbit_demo(const SuiteOptions& opt);

Report full_report(const SuiteOptions& opt);

}  // namespace jgpt
