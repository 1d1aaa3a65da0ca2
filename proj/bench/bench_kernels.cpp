// Times the OpenMP-partitioned kernels against their serial reference
// implementations and cross-checks that they agree.
//
//   systolic_bench [depth]   (default 12, capped to 16)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "systolic/poincare.hpp"
#include "systolic/surfaces.hpp"

using namespace systolic;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* env = std::getenv("SYSTOLIC_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
    std::printf("workers: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    const int depth = std::clamp(argc > 1 ? std::atoi(argv[1]) : 12, 2, 16);
    std::printf("depth: %d (%llu words)\n\n", depth,
                static_cast<unsigned long long>(count_elements(depth)));

    const auto pants = build_pants({4.0, 4.0, 4.0});
    const auto torus = build_torus({4.0, 0.5});

    {
        double s_val = 0.0, p_val = 0.0;
        const double s_ms = time_ms([&] { s_val = poincare_sum_serial(pants, 0.6, depth); });
        const double p_ms = time_ms([&] { p_val = poincare_sum(pants, 0.6, depth); });
        report("series (pants)", s_ms, p_ms,
               std::abs(s_val - p_val) <= 1e-12 * std::max(1.0, std::abs(s_val)));
    }
    {
        double s_val = 0.0, p_val = 0.0;
        const double s_ms = time_ms([&] { s_val = poincare_sum_serial(torus, 0.5, depth); });
        const double p_ms = time_ms([&] { p_val = poincare_sum(torus, 0.5, depth); });
        report("series (torus)", s_ms, p_ms,
               std::abs(s_val - p_val) <= 1e-12 * std::max(1.0, std::abs(s_val)));
    }
    {
        SystoleEstimate s_est{}, p_est{};
        const double s_ms = time_ms([&] { s_est = systole_estimate_serial(torus, depth); });
        const double p_ms = time_ms([&] { p_est = systole_estimate(torus, depth); });
        report("systole (torus)", s_ms, p_ms,
               s_est.length == p_est.length && s_est.word == p_est.word);
    }
    {
        const double safe = max_safe_radius(pants, depth);
        const std::vector<double> radii{safe / 3.0, 2.0 * safe / 3.0, safe};
        std::vector<OrbitPoint> s_pts, p_pts;
        const double s_ms = time_ms([&] { s_pts = empirical_delta_serial(pants, radii, depth); });
        const double p_ms = time_ms([&] { p_pts = empirical_delta(pants, radii, depth); });
        bool agree = s_pts.size() == p_pts.size();
        for (std::size_t i = 0; agree && i < s_pts.size(); ++i)
            agree = s_pts[i].count == p_pts[i].count;
        report("orbit counts (pants)", s_ms, p_ms, agree);
    }
    return 0;
}
