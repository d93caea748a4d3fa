// Compares the serial reference campaign runner against the OpenMP path on
// the same workload and verifies they produce identical rows.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "ffarc/campaign.hpp"
#include "ffarc/parallel.hpp"

namespace {

double run_ms(const ffarc::ProbeParams& params, ffarc::ProbeResult& out, bool serial) {
    const auto t0 = std::chrono::steady_clock::now();
    out = serial ? ffarc::run_probe_serial(params) : ffarc::run_probe(params);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    ffarc::ProbeParams params;
    params.trials = argc > 1 ? std::atoi(argv[1]) : 20000;
    params.n = argc > 2 ? std::atoi(argv[2]) : 12;
    params.seed = 20240001;

    const int jobs = argc > 3 ? std::atoi(argv[3]) : ffarc::hardware_jobs();

    std::printf("probe benchmark: trials=%d n=%d M=%d jobs=%d\n", params.trials, params.n,
                params.domain, jobs);

    ffarc::ProbeResult serial;
    ffarc::ProbeResult parallel;
    params.jobs = 1;
    const double serial_ms = run_ms(params, serial, true);
    params.jobs = jobs;
    const double parallel_ms = run_ms(params, parallel, false);

    std::printf("  serial reference : %10.2f ms\n", serial_ms);
    std::printf("  openmp (%2d jobs) : %10.2f ms\n", jobs, parallel_ms);
    std::printf("  speedup          : %10.2fx\n", parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);

    if (serial.rows != parallel.rows) {
        std::printf("MISMATCH: serial and parallel rows differ\n");
        return 1;
    }
    std::printf("rows identical (%zu), any_fail=%s\n", serial.rows.size(),
                serial.any_fail ? "yes" : "no");
    return serial.any_fail ? 1 : 0;
}
