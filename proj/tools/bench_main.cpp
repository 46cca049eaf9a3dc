// Timings for the delta2 kernel (naive reference vs bit rows vs bit rows +
// OpenMP) and for the corpus invariant sweep at 1 vs all threads.

#include <chrono>
#include <cstdio>
#include <functional>

#include "mcd/generators.hpp"
#include "mcd/invariants.hpp"
#include "mcd/parallel.hpp"
#include "mcd/reference.hpp"
#include "mcd/structure.hpp"

using namespace mcd;

namespace {

double time_ms(const std::function<void()>& fn, int reps = 3) {
    double best = 1e18;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

long long sink = 0;   // read at exit so the timed calls cannot be elided

} // namespace

int main() {
    std::printf("delta2 kernel, random triangle-free graphs (p=0.3)\n");
    std::printf("%8s %12s %12s %12s %10s %10s\n", "n", "naive ms", "bits x1 ms", "bits xN ms",
                "bits/naive", "xN/x1");
    for (int n : {128, 256, 512, 1024}) {
        Graph g = random_triangle_free(n, 0.3, 1000 + n);
        double t_ref = -1.0;
        if (n <= 512)
            t_ref = time_ms([&] {
                auto v = ref::min_common_degree(g);
                sink += v ? *v : -1;
            });
        set_jobs(1);
        double t_one = time_ms([&] {
            auto v = min_common_degree(g);
            sink += v.is_infinite() ? -1 : v.value();
        });
        set_jobs(hardware_jobs());
        double t_all = time_ms([&] {
            auto v = min_common_degree(g);
            sink += v.is_infinite() ? -1 : v.value();
        });
        if (t_ref >= 0)
            std::printf("%8d %12.3f %12.3f %12.3f %9.1fx %9.2fx\n", n, t_ref, t_one, t_all,
                        t_ref / t_one, t_one / t_all);
        else
            std::printf("%8d %12s %12.3f %12.3f %10s %9.2fx\n", n, "-", t_one, t_all, "-",
                        t_one / t_all);
    }

    std::printf("\ncorpus sweep: delta2 + odd girth + C5-homomorphism over all\n");
    std::printf("triangle-free classes on 9 vertices\n");
    auto corpus = enumerate_triangle_free(9);
    auto sweep = [&] {
        std::vector<int> out(corpus.size());
        parallel_for_index(corpus.size(), [&](std::size_t i) {
            const Graph& g = corpus[i].graph;
            auto d2 = min_common_degree(g);
            auto cyc = shortest_odd_cycle(g);
            auto hom = check_c5_hom_theorem(g);
            out[i] = int(d2.is_infinite()) + int(cyc.has_value()) + int(hom.conclusion);
        });
        for (int x : out) sink += x;
    };
    set_jobs(1);
    double t_serial = time_ms(sweep, 2);
    set_jobs(hardware_jobs());
    double t_par = time_ms(sweep, 2);
    std::printf("%zu graphs: serial %.1f ms, %d threads %.1f ms (%.2fx)\n", corpus.size(), t_serial,
                hardware_jobs(), t_par, t_serial / t_par);
    return sink == 0x7fffffff ? 1 : 0;
}
