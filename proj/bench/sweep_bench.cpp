// Compares the serial reference sweep with the OpenMP path on the heavier
// trial kernels and checks that both produce identical outcomes.

#include <chrono>
#include <cstdio>

#include "jgpt/filter.hpp"
#include "jgpt/reconstruction.hpp"
#include "jgpt/suites.hpp"

using namespace jgpt;

namespace {

template <class Trial>
void bench_one(const char* name, int samples, Trial&& trial) {
  using clock = std::chrono::steady_clock;

  auto t0 = clock::now();
  SweepOutcome serial = run_sweep(samples, 0, 1, 1e-8, trial, Exec::Serial);
  auto t1 = clock::now();
  SweepOutcome parallel = run_sweep(samples, 0, 1, 1e-8, trial, Exec::Parallel);
  auto t2 = clock::now();

  double ms_serial = std::chrono::duration<double, std::milli>(t1 - t0).count();
  double ms_parallel =
      std::chrono::duration<double, std::milli>(t2 - t1).count();
  bool identical = serial.worst == parallel.worst &&
                   serial.worst_index == parallel.worst_index &&
                   serial.failures == parallel.failures;
  std::printf("%-28s %5d trials  serial %8.1f ms  parallel %8.1f ms  "
              "speedup %.2fx  identical=%s\n",
              name, samples, ms_serial, ms_parallel,
              ms_serial / (ms_parallel > 0 ? ms_parallel : 1e-9),
              identical ? "yes" : "NO");
}

}  // namespace

int main() {
  Model complex4 = Model::jordan(Algebra::complex_herm(4));
  Model quat3 = Model::jordan(Algebra::quat_herm(3));
  Conjugate conj4 = make_conjugate(complex4);
  Conjugate conjq = make_conjugate(quat3);

  bench_one("product-recovery complex(4)", 200, [&](Rng& rng) {
    const Algebra& alg = complex4.algebra();
    Element a = random_element(alg, rng);
    Element b = random_element(alg, rng);
    return norm(recovered_product(a, b) - jordan_product(a, b)) /
           (1.0 + norm(a) * norm(b));
  });

  bench_one("dilation-validate quat(3)", 100, [&](Rng& rng) {
    State alpha = random_state(quat3, rng);
    BipartiteState w = correlation_dilation(conjq, alpha);
    double worst = validate_bipartite(w, rng, 3).worst_violation();
    return std::max(worst, norm(*marginal(w, Side::A).cone - *alpha.cone));
  });

  bench_one("prepare-state complex(4)", 200, [&](Rng& rng) {
    State alpha = random_state(complex4, rng);
    Filter f = prepare_state(complex4, alpha);
    Rng inner(rng.engine()());
    return std::max(filter_symmetry_residual(f.map, conj4, inner, 10),
                    p_reversibility_check(f, inner).identity_residual);
  });

  bench_one("homogeneity complex(4)", 200, [&](Rng& rng) {
    const Algebra& alg = complex4.algebra();
    Element a = random_cone_interior(alg, rng);
    Element b = random_cone_interior(alg, rng);
    return norm(homogeneity_transport(a, b).apply(a) - b);
  });

  return 0;
}
