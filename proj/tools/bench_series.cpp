// Benchmark of the serial vs. OpenMP multiplication kernels on dense
// random series.  The parallel kernel must produce bit-identical results;
// the run aborts if it does not.

#include <chrono>
#include <cstdio>
#include <random>

#include "discpot/series.hpp"

using namespace discpot;

namespace {

TruncatedSeries random_series(const VariableSpec& spec, const Truncation& trunc,
                              std::mt19937& rng, int terms) {
    TruncatedSeries s(spec, trunc);
    std::uniform_int_distribution<int> small(0, trunc.small_total_max);
    std::uniform_int_distribution<int> phase(-trunc.z_window, trunc.z_window);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(spec.arity());
        for (int i = 0; i < spec.num_small(); ++i) e[i] = small(rng);
        for (int i = spec.num_small(); i < spec.arity(); ++i) e[i] = phase(rng);
        s.add_term(e, rat(num(rng), den(rng)));
    }
    return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    VariableSpec spec({"q", "uv"}, {"z1", "z2"});
    Truncation trunc;
    trunc.small_total_max = 12;
    trunc.z_window = 12;

    std::mt19937 rng(20240817);
    const int sizes[] = {200, 800, 2000};
    for (int n : sizes) {
        TruncatedSeries a = random_series(spec, trunc, rng, n);
        TruncatedSeries b = random_series(spec, trunc, rng, n);

        auto t0 = std::chrono::steady_clock::now();
        TruncatedSeries serial = mul_serial(a, b);
        double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        TruncatedSeries parallel = mul_parallel(a, b);
        double tp = seconds_since(t0);

        if (!(serial == parallel)) {
            std::fprintf(stderr, "kernel mismatch at size %d\n", n);
            return 1;
        }
        std::printf("terms %4d x %4d  serial %.4fs  parallel %.4fs  speedup %.2fx\n",
                    static_cast<int>(a.terms().size()), static_cast<int>(b.terms().size()),
                    ts, tp, tp > 0 ? ts / tp : 0.0);
    }
    std::puts("kernels agree bit-for-bit");
    return 0;
}
