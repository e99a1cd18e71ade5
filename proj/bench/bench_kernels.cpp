// Timing comparison between the serial reference kernels and the
// OpenMP-parallel ones. Values are asserted equal in tests/test_parallel.cpp;
// this binary only reports wall time.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symcap/catalog.hpp"
#include "symcap/ech.hpp"
#include "symcap/weights.hpp"

using namespace symcap;

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

double time_union(const std::vector<Rational>& balls, std::int64_t kmax, Exec exec) {
    UnionCapacityTable table(balls);
    const auto t0 = std::chrono::steady_clock::now();
    table.ensure(kmax, exec);
    return ms_since(t0);
}

double time_wc(const MomentPolygon& omega, std::int64_t kmax, Exec exec) {
    WeaklyConvexCapacities wc(omega);
    const auto t0 = std::chrono::steady_clock::now();
    wc.table(kmax, exec);
    return ms_since(t0);
}

void report(const char* kernel, std::int64_t kmax, double serial_ms, double parallel_ms) {
    std::printf("%-28s %6lld %12.1f %12.1f %9.2fx\n", kernel, static_cast<long long>(kmax),
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial kernel\n");
#endif
    std::printf("%-28s %6s %12s %12s %10s\n", "kernel", "k_max", "serial ms", "parallel ms",
                "speedup");

    const WeightSequence ws10 = weight_sequence(random_concave_polygon(3, 10));
    for (std::int64_t kmax : {1500, 3000})
        report("union DP, 10+ balls", kmax, time_union(ws10.weights, kmax, Exec::Serial),
               time_union(ws10.weights, kmax, Exec::Parallel));

    const MomentPolygon xa = make_Xa(Rational(3, 8));
    for (std::int64_t kmax : {200, 400})
        report("weakly convex table, X_a", kmax, time_wc(xa, kmax, Exec::Serial),
               time_wc(xa, kmax, Exec::Parallel));

    const MomentPolygon wc6 = random_weakly_convex_polygon(9, 6);
    for (std::int64_t kmax : {200, 400})
        report("weakly convex table, random", kmax, time_wc(wc6, kmax, Exec::Serial),
               time_wc(wc6, kmax, Exec::Parallel));
    return 0;
}
