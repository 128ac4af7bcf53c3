#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "jgpt/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jgpt {

enum class Exec { Serial, Parallel };

// Parallel by default when built with OpenMP; JGPT_EXEC=serial forces the
// reference path at runtime.
inline Exec default_exec() {
#ifdef _OPENMP
  if (const char* e = std::getenv("JGPT_EXEC")) {
    if (std::string(e) == "serial") return Exec::Serial;
  }
  return Exec::Parallel;
#else
  return Exec::Serial;
#endif
}

struct SweepOutcome {
  int samples = 0;
  double worst = 0.0;   // max residual over trials
  int worst_index = -1;
  int failures = 0;     // trials with residual > tol

  bool pass() const { return failures == 0; }
};

// Runs `trial(rng) -> residual` for `samples` independent trials. Each trial
// gets its own generator derived from (seed, stream, index), so serial and
// parallel execution produce identical outcomes. Residuals are collected
// into a buffer and reduced serially; the reduction is order-independent.
template <class Trial>
SweepOutcome run_sweep(int samples, std::uint64_t seed, std::uint64_t stream,
                       double tol, Trial&& trial, Exec exec = default_exec()) {
  std::vector<double> residuals(static_cast<std::size_t>(samples), 0.0);

  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < samples; ++i) {
      Rng rng(derive_seed(seed, stream, static_cast<std::uint64_t>(i)));
      residuals[static_cast<std::size_t>(i)] = trial(rng);
    }
  } else {
    for (int i = 0; i < samples; ++i) {
      Rng rng(derive_seed(seed, stream, static_cast<std::uint64_t>(i)));
      residuals[static_cast<std::size_t>(i)] = trial(rng);
    }
  }

  SweepOutcome out;
  out.samples = samples;
  for (int i = 0; i < samples; ++i) {
    double r = residuals[static_cast<std::size_t>(i)];
    if (r > out.worst || out.worst_index < 0) {
      out.worst = r;
      out.worst_index = i;
    }
    if (r > tol) ++out.failures;
  }
  if (samples == 0) out.worst = 0.0;
  return out;
}

}  // namespace jgpt
