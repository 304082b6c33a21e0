// Serial vs OpenMP timings for the verification kernels.
//
//   bench_kernels [M] [repeats]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "schwinger/kernels.hpp"
#include "schwinger/numtheory.hpp"
#include "schwinger/representations.hpp"

using namespace schwinger;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
    std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(2)
              << std::setw(12) << serial_ms << std::setw(12) << parallel_ms << std::setw(9)
              << serial_ms / parallel_ms << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t M = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 210;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    if (M == 0 || M > kMaxMaterializedDimension) {
        std::cerr << "M must be in [1, " << kMaxMaterializedDimension << "]\n";
        return 2;
    }

    const auto f = factorize(M);
    const auto splits = enumerate_bifactorizations(f);
    const auto bi = splits.back();
    const auto kq = build_kq_basis(bi);
    const auto KQ = build_conjugate_kq_basis(bi);
    const auto pos = build_complete_basis(f, BasisKind::CompletePosition);
    const auto mom = build_complete_basis(f, BasisKind::CompleteMomentum);

    std::cout << "M = " << M << ", split " << bi.m1() << "*" << bi.m2() << ", threads " << omp_get_max_threads()
              << ", best of " << repeats << "\n";
    std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12) << "serial ms" << std::setw(12)
              << "omp ms" << std::setw(10) << "speedup" << "\n";

    row("overlap_table kq|KQ", best_of(repeats, [&] { kernels::serial::overlap_table(kq, KQ); }),
        best_of(repeats, [&] { kernels::parallel::overlap_table(kq, KQ); }));
    row("overlap_table complete", best_of(repeats, [&] { kernels::serial::overlap_table(pos, mom); }),
        best_of(repeats, [&] { kernels::parallel::overlap_table(pos, mom); }));
    row("dense_overlap_table kq|KQ", best_of(repeats, [&] { kernels::serial::dense_overlap_table(kq, KQ); }),
        best_of(repeats, [&] { kernels::parallel::dense_overlap_table(kq, KQ); }));
    const std::uint64_t scan = 20000;
    row("unit_root_counts 1.." + std::to_string(scan), best_of(repeats, [&] { kernels::serial::unit_root_counts(scan); }),
        best_of(repeats, [&] { kernels::parallel::unit_root_counts(scan); }));
    return 0;
}
