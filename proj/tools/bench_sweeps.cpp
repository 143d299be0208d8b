// Times the OpenMP sweep kernels against the serial reference and verifies
// that both produce identical results.

#include <cstdio>
#include <string>

#include "abtaxon/oracle/sweeps.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace {

using abtaxon::oracle::SweepConfig;
using abtaxon::oracle::SweepResult;

bool same_outcome(const SweepResult& a, const SweepResult& b) {
    return a.items == b.items && a.checks == b.checks &&
           a.literal_crosschecks == b.literal_crosschecks &&
           a.counterexamples == b.counterexamples && a.criterion_demoted == b.criterion_demoted;
}

template <typename Run>
void bench(const char* label, Run&& run) {
    SweepConfig serial_cfg;
    serial_cfg.parallel = false;
    serial_cfg.order_ceiling = 1024;
    SweepConfig parallel_cfg = serial_cfg;
    parallel_cfg.parallel = true;

    SweepResult s = run(serial_cfg);
    SweepResult p = run(parallel_cfg);
    const char* match = same_outcome(s, p) ? "identical" : "MISMATCH";
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   results %s\n", label,
                s.seconds, p.seconds, p.seconds > 0 ? s.seconds / p.seconds : 0.0, match);
}

}  // namespace

int main(int argc, char** argv) {
    std::uint32_t bassian_order = 128;
    if (argc > 1) bassian_order = static_cast<std::uint32_t>(std::stoul(argv[1]));

#if defined(_OPENMP)
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("compiled without OpenMP; both runs are serial\n");
#endif

    bench("bassian-sweep", [&](const SweepConfig& cfg) {
        return abtaxon::oracle::bassian_sweep(bassian_order, cfg);
    });
    bench("hom-count (<= 48)", [&](const SweepConfig& cfg) {
        return abtaxon::oracle::hom_count_sweep(48, cfg);
    });
    bench("embedding-equiv p=2 e=6", [&](const SweepConfig& cfg) {
        return abtaxon::oracle::embedding_equiv_sweep(2, 6, cfg);
    });
    bench("lemma-basic p=2 (<= 128)", [&](const SweepConfig& cfg) {
        return abtaxon::oracle::lemma_basic_sweep(2, 128, 1000, 7, cfg);
    });
    return 0;
}
