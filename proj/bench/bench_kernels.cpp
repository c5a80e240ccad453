// Serial vs OpenMP timings for the scan kernels.  The serial paths are the
// reference implementations the tests compare against; this binary shows
// what the parallel paths buy on top.
//
//   rf3_bench [q ...]      (default: 11 13)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "rf3/oracle.hpp"

using namespace rf3;

namespace {

FieldCtx field_q(u32 q) {
    u32 p = 2;
    while (q % p != 0) ++p;
    u32 n = 0, v = q;
    while (v > 1) {
        v /= p;
        ++n;
    }
    return FieldCtx(p, n);
}

template <class Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_field(u32 q) {
    FieldCtx F = field_q(q);
    std::printf("q = %u\n", q);

    u32 orbits_serial = 0, orbits_parallel = 0;
    double ts = time_ms([&] { orbits_serial = orbit_partition_fst(F, Exec::serial).orbit_count; });
    double tp = time_ms(
        [&] { orbits_parallel = orbit_partition_fst(F, Exec::parallel).orbit_count; });
    std::printf("  orbit-partition   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx%s\n",
                ts, tp, ts / tp, orbits_serial == orbits_parallel ? "" : "  MISMATCH");

    auto reps = representatives(F, Exec::parallel);
    RatFun a = reps.back().fn;
    RatFun b = reps[reps.size() - 2].fn;
    bool es = false, ep = false;
    ts = time_ms([&] { es = brute_equiv(F, a, b, Exec::serial).has_value(); });
    tp = time_ms([&] { ep = brute_equiv(F, a, b, Exec::parallel).has_value(); });
    std::printf("  brute-equiv       serial %8.1f ms   parallel %8.1f ms   speedup %.2fx%s\n",
                ts, tp, ts / tp, es == ep ? "" : "  MISMATCH");

    size_t ns = 0, np = 0;
    ts = time_ms([&] { ns = representatives(F, Exec::serial).size(); });
    tp = time_ms([&] { np = representatives(F, Exec::parallel).size(); });
    std::printf("  representatives   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx%s\n",
                ts, tp, ts / tp, ns == np ? "" : "  MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<u32> qs;
    for (int i = 1; i < argc; ++i) qs.push_back(u32(std::atoi(argv[i])));
    if (qs.empty()) qs = {11, 13};
    for (u32 q : qs) bench_field(q);
    return 0;
}
