// Acceptance suite. Runs every exit criterion at its pinned tolerance and
// runtime limit, printing one PASS/FAIL line each. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "zpinterp/zpinterp.hpp"

using namespace zpinterp;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_seconds;
    std::function<Outcome()> check;
};

std::string fmt(const char* format, auto... args)
{
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

Sequence random_complex(std::size_t n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    std::vector<cplx> v(n);
    for (auto& s : v) {
        const double re = rng.symmetric();
        s = cplx(re, rng.symmetric());
    }
    return Sequence(std::move(v), 1.0);
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b)
{
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

double max_discrepancy(std::size_t n, std::size_t l, const OmegaGrid& grid)
{
    double worst = 0.0;
    for (const double w : grid.points()) {
        worst = std::max(worst, std::abs(dirichlet(n, w) - psinc(n, l, w)));
    }
    return worst;
}

Outcome kernel_convergence()
{
    const auto grid = OmegaGrid::symmetric(1024);
    const std::vector<std::size_t> ls{0, 2, 5, 10};
    const auto rows = kernel_discrepancy(8, ls, grid);
    std::vector<double> worst_db(ls.size(), -std::numeric_limits<double>::infinity());
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (r.truncation == ls[i]) {
                worst_db[i] = std::max(worst_db[i], r.discrepancy_db);
            }
        }
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        decreasing = decreasing && worst_db[i] < worst_db[i - 1];
    }
    const bool below = worst_db.back() < -55.0;
    return {below && decreasing, fmt("max dB by L{0,2,5,10} = %.1f, %.1f, %.1f, %.1f (need L=10 < -55, strictly decreasing)",
                                     worst_db[0], worst_db[1], worst_db[2], worst_db[3])};
}

Outcome near_origin()
{
    const auto grid = OmegaGrid::symmetric(1024);
    bool ok = true;
    std::string detail;
    for (const std::size_t l : {2u, 5u}) {
        double near_sum = 0.0;
        double far_sum = 0.0;
        int near_n = 0;
        int far_n = 0;
        for (const double w : grid.points()) {
            const double d = std::abs(dirichlet(8, w) - psinc(8, l, w));
            if (std::abs(w) < 0.1) {
                near_sum += d;
                ++near_n;
            } else if (std::abs(w) >= 3.0) {
                far_sum += d;
                ++far_n;
            }
        }
        const double near_mean = near_sum / near_n;
        const double far_mean = far_sum / far_n;
        ok = ok && near_n > 0 && far_n > 0 && near_mean < far_mean;
        detail += fmt("L=%zu near %.2e vs far %.2e; ", l, near_mean, far_mean);
    }
    return {ok, detail};
}

Outcome identity_truncation_tail()
{
    const auto grid = OmegaGrid::symmetric(1024);
    double worst = 0.0;
    for (const std::size_t n : {4u, 5u, 8u, 9u}) {
        worst = std::max(worst, max_discrepancy(n, 200, grid));
    }
    return {worst < 1e-3, fmt("max |dirichlet - psinc(L=200)| = %.3e (need < 1e-3)", worst)};
}

struct SweepStats {
    double oracle_gap = 0.0;
    double preservation_rel = 0.0;
    double identity_rel = 0.0;
};

const SweepStats& upsample_sweep()
{
    static const SweepStats stats = [] {
        SweepStats s;
        for (std::size_t n = 2; n <= 32; ++n) {
            for (const std::size_t factor : {1u, 2u, 3u, 4u, 7u}) {
                for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                    const auto x = random_complex(n, seed * 1000003ULL + n * 101 + factor);
                    const auto fast = fft_upsample(x, factor);
                    const auto direct = dirichlet_upsample_direct(x, factor);
                    s.oracle_gap = std::max(s.oracle_gap, max_abs_diff(fast.samples(), direct.samples()));
                    for (std::size_t q = 0; q < n; ++q) {
                        const double rel = std::abs(fast[factor * q] - x[q]) / std::abs(x[q]);
                        s.preservation_rel = std::max(s.preservation_rel, rel);
                    }
                    if (factor == 1) {
                        const double rel = max_abs_diff(fast.samples(), x.samples()) / x.max_abs();
                        s.identity_rel = std::max(s.identity_rel, rel);
                    }
                }
            }
        }
        return s;
    }();
    return stats;
}

Outcome oracle_equivalence()
{
    const auto& s = upsample_sweep();
    return {s.oracle_gap <= 1e-9, fmt("max |fast - direct| = %.3e over 3100 cases (need <= 1e-9)", s.oracle_gap)};
}

Outcome preservation_and_identity()
{
    const auto& s = upsample_sweep();
    return {s.preservation_rel <= 1e-10 && s.identity_rel <= 1e-12,
            fmt("sample preservation rel %.3e (<= 1e-10), M=1 identity rel %.3e (<= 1e-12)", s.preservation_rel,
                s.identity_rel)};
}

Outcome method_two_grid()
{
    double worst = 0.0;
    for (const std::size_t n : {4u, 8u, 16u}) {
        const auto x = random_complex(n, 60 + n);
        const auto X = dft_naive(x);
        for (const std::size_t factor : {2u, 3u}) {
            const auto up = spectrum_upsample(x, factor);
            const auto refined = static_cast<double>(factor * n);
            for (std::size_t k = 0; k < n; ++k) {
                worst = std::max(worst, std::abs(up[factor * k] * refined - X[k] * static_cast<double>(n)));
            }
        }
    }
    return {worst <= 1e-10, fmt("max |MN up[Mk] - N X[k]| = %.3e (need <= 1e-10)", worst)};
}

Outcome transform_correctness()
{
    std::vector<std::size_t> lengths;
    for (std::size_t n = 1; n <= 128; ++n) {
        lengths.push_back(n);
    }
    for (const std::size_t n : {256u, 500u, 1000u, 1024u}) {
        lengths.push_back(n);
    }
    double fft_ratio = 0.0; // error / (1e-10 N max|x|)
    for (const std::size_t n : lengths) {
        const auto x = random_complex(n, 7000 + n);
        const double tol = 1e-10 * static_cast<double>(n) * x.max_abs();
        fft_ratio = std::max(fft_ratio, max_abs_diff(fft_forward(x).values(), dft_naive(x).values()) / tol);
        const SpectrumSamples X(std::vector<cplx>(x.samples().begin(), x.samples().end()));
        fft_ratio = std::max(fft_ratio, max_abs_diff(fft_inverse(X).samples(), idft_naive(X).samples()) / tol);
    }
    double inversion = 0.0;
    double parseval = 0.0;
    for (std::size_t n = 1; n <= 64; ++n) {
        const auto x = random_complex(n, 9000 + n);
        const auto X = dft_naive(x);
        inversion = std::max(inversion, max_abs_diff(idft_naive(X).samples(), x.samples()) / x.max_abs());
        double et = 0.0;
        double ef = 0.0;
        for (const auto& v : x.samples()) {
            et += std::norm(v);
        }
        for (const auto& v : X.values()) {
            ef += std::norm(v);
        }
        parseval = std::max(parseval, std::abs(et - static_cast<double>(n) * ef) / et);
    }
    const bool ok = fft_ratio <= 1.0 && inversion <= 1e-12 && parseval <= 1e-10;
    return {ok, fmt("fft err/tol %.3e (<= 1), inversion rel %.3e (<= 1e-12), Parseval rel %.3e (<= 1e-10)", fft_ratio,
                    inversion, parseval)};
}

Outcome trigonometric_exactness()
{
    // For even N the Dirichlet interpolant spans harmonics -(N-1)/2 .. (N-1)/2
    // in unit steps, i.e. half-integers.
    SignalSpec spec;
    spec.kind = SignalKind::multitone;
    spec.length = 32;
    spec.harmonics = {-15.5, -9.5, -2.5, 0.5, 6.5, 11.5, 15.5};
    spec.amplitudes = {0.8, cplx(0.1, -0.6), cplx(-0.4, 0.4), 1.0, cplx(0.0, 0.9), -0.3, cplx(0.25, 0.25)};
    spec.bandlimited = true;
    const std::size_t factor = 4;
    const auto y = fft_upsample(generate(spec), factor);
    double worst = 0.0;
    for (std::size_t m = 0; m < y.size(); ++m) {
        const double t = static_cast<double>(m) / static_cast<double>(factor);
        worst = std::max(worst, std::abs(y[m] - eval_ground_truth(spec, t)));
    }
    return {worst <= 1e-8, fmt("max |fast - closed form| = %.3e at all %zu refined points (need <= 1e-8)", worst,
                               y.size())};
}

Outcome windowing_effect()
{
    SignalSpec spec;
    spec.kind = SignalKind::gaussian_pulse;
    spec.length = 64;
    spec.center = 32.0;
    spec.width = 8.0;
    const auto rows = upsample_error_study(spec, 2);
    const auto& fast = rows.front();
    return {fast.method == Method::fast_fft && fast.edge.max_abs > fast.interior.max_abs,
            fmt("fast-fft edge max %.3e vs interior max %.3e (need edge > interior)", fast.edge.max_abs,
                fast.interior.max_abs)};
}

Outcome performance()
{
    const std::vector<std::size_t> sizes{4096};
    const Method methods[] = {Method::fast_fft, Method::dirichlet_direct};
    const auto rows = bench_methods(sizes, 2, 3, methods);
    const double fast = rows[0].median_seconds;
    const double direct = rows[1].median_seconds;
    return {fast * 10.0 <= direct, fmt("median fast %.3e s, direct %.3e s, speedup %.0fx (need >= 10x)", fast, direct,
                                       direct / fast)};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "kernel convergence (-55 dB at L=10, decreasing in L)", 1.0, kernel_convergence},
        {2, "near-origin discrepancy smaller than near pi", 1.0, near_origin},
        {3, "Dirichlet = periodized sinc, L=200 tail < 1e-3", 5.0, identity_truncation_tail},
        {4, "fast pipeline equals direct Dirichlet sum", 30.0, oracle_equivalence},
        {5, "sample preservation and M=1 identity", 30.0, preservation_and_identity},
        {6, "zero-padded spectrum on shared grid points", 1.0, method_two_grid},
        {7, "fft vs naive DFT, inversion, Parseval", 10.0, transform_correctness},
        {8, "trigonometric exactness, N=32, M=4", 1.0, trigonometric_exactness},
        {9, "windowing effect: edge error exceeds interior", 1.0, windowing_effect},
        {10, "fast method >= 10x faster than direct at N=4096", 60.0, performance},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = elapsed < c.time_limit_seconds;
        const bool passed = outcome.passed && in_time;
        failures += passed ? 0 : 1;
        std::printf("[%s] AC%-2d %s: %s [%.3f s, limit %.0f s%s]\n", passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    outcome.detail.c_str(), elapsed, c.time_limit_seconds, in_time ? "" : ", TOO SLOW");
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
