#pragma once

// Error reports, the Dirichlet vs periodized-sinc discrepancy table, the
// method-vs-ground-truth study, and wall-clock benchmarks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zpinterp/interpolate.hpp"
#include "zpinterp/kernels.hpp"
#include "zpinterp/seqio.hpp"
#include "zpinterp/sequence.hpp"
#include "zpinterp/signals.hpp"

namespace zpinterp {

/// 20 lg(value); -inf for zero.
inline double to_db(double magnitude)
{
    if (magnitude == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return 20.0 * std::log10(magnitude);
}

struct ErrorReport {
    double max_abs = 0.0;
    double rms = 0.0;
    double max_db = -std::numeric_limits<double>::infinity();
    std::size_t argmax_index = 0;
    std::size_t count = 0;
};

/// Statistics of a list of absolute errors. An empty list gives the all-zero report.
inline ErrorReport summarize_errors(std::span<const double> abs_errors)
{
    ErrorReport report;
    report.count = abs_errors.size();
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < abs_errors.size(); ++i) {
        const double e = abs_errors[i];
        sum_sq += e * e;
        if (e > report.max_abs) {
            report.max_abs = e;
            report.argmax_index = i;
        }
    }
    if (!abs_errors.empty()) {
        report.rms = std::sqrt(sum_sq / static_cast<double>(abs_errors.size()));
        // rms can exceed max by an ulp when every entry is equal
        report.rms = std::min(report.rms, report.max_abs);
    }
    report.max_db = to_db(report.max_abs);
    return report;
}

inline ErrorReport compare_samples(std::span<const cplx> a, std::span<const cplx> b)
{
    detail::require(a.size() == b.size(), "compare: sequences differ in length");
    std::vector<double> errors(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        errors[i] = std::abs(a[i] - b[i]);
    }
    return summarize_errors(errors);
}

inline ErrorReport compare_sequences(const Sequence& a, const Sequence& b)
{
    return compare_samples(a.samples(), b.samples());
}

/// "maxAbs=... rms=... maxDb=..." with an empty maxDb for identical inputs.
inline std::string format_report(const ErrorReport& report)
{
    std::string out = "maxAbs=" + format_double(report.max_abs) + " rms=" + format_double(report.rms) +
                      " maxDb=";
    if (std::isfinite(report.max_db)) {
        out += format_double(report.max_db);
    }
    return out;
}

/// Uniform frequency grid built from (start, stop, count), endpoints included.
class OmegaGrid {
public:
    OmegaGrid(double start, double stop, std::size_t count) : start_(start), stop_(stop), count_(count)
    {
        detail::require(std::isfinite(start) && std::isfinite(stop), "grid bounds must be finite");
        detail::require(count >= 2, "grid needs at least two points");
        detail::require(stop > start, "grid must be strictly increasing");
        points_.resize(count);
        const double step = (stop - start) / static_cast<double>(count - 1);
        for (std::size_t i = 0; i < count; ++i) {
            points_[i] = start + step * static_cast<double>(i);
        }
        points_.back() = stop;
    }

    /// Parses "START:STOP:COUNT".
    static OmegaGrid parse(std::string_view text)
    {
        const auto first = text.find(':');
        const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
        detail::require(second != std::string_view::npos, "grid must look like START:STOP:COUNT");
        const auto start = detail::parse_double(text.substr(0, first));
        const auto stop = detail::parse_double(text.substr(first + 1, second - first - 1));
        const auto count = detail::parse_index(text.substr(second + 1));
        detail::require(start && stop && count, "grid must look like START:STOP:COUNT");
        return OmegaGrid(*start, *stop, *count);
    }

    /// Default frequency axis: 1024 points over [-pi, pi].
    static OmegaGrid symmetric(std::size_t count = 1024) { return OmegaGrid(-kPi, kPi, count); }

    [[nodiscard]] std::span<const double> points() const noexcept { return points_; }
    [[nodiscard]] double start() const noexcept { return start_; }
    [[nodiscard]] double stop() const noexcept { return stop_; }
    [[nodiscard]] std::size_t count() const noexcept { return count_; }

    [[nodiscard]] std::string descriptor() const
    {
        return format_double(start_) + ":" + format_double(stop_) + ":" + std::to_string(count_);
    }

private:
    double start_;
    double stop_;
    std::size_t count_;
    std::vector<double> points_;
};

struct KernelDiscrepancyRow {
    double omega = 0.0;
    std::size_t truncation = 0;
    double dirichlet = 0.0;
    double psinc = 0.0;
    double discrepancy = 0.0;    // |dirichlet - psinc|
    double discrepancy_db = 0.0; // -inf when the two agree exactly
};

inline const std::vector<std::size_t>& default_truncations()
{
    static const std::vector<std::size_t> ls{0, 2, 5, 10, 20};
    return ls;
}

/// One row per (L, omega), grouped by L in the order given.
inline std::vector<KernelDiscrepancyRow> kernel_discrepancy(std::size_t order,
                                                            std::span<const std::size_t> truncations,
                                                            const OmegaGrid& grid)
{
    const KernelSpec base(order);
    std::vector<KernelDiscrepancyRow> rows;
    rows.reserve(truncations.size() * grid.count());
    for (const std::size_t l : truncations) {
        const KernelSpec spec(order, l);
        for (const double w : grid.points()) {
            KernelDiscrepancyRow row;
            row.omega = w;
            row.truncation = l;
            row.dirichlet = dirichlet(base, w);
            row.psinc = psinc(spec, w);
            row.discrepancy = std::abs(row.dirichlet - row.psinc);
            row.discrepancy_db = to_db(row.discrepancy);
            rows.push_back(row);
        }
    }
    return rows;
}

inline const std::vector<std::string>& kernel_table_columns()
{
    static const std::vector<std::string> columns{"omega", "L", "dirichlet", "psinc", "discrepancy_db"};
    return columns;
}

inline std::vector<TableRow> to_table(std::span<const KernelDiscrepancyRow> rows)
{
    std::vector<TableRow> table;
    table.reserve(rows.size());
    for (const auto& r : rows) {
        table.push_back({r.omega, static_cast<std::int64_t>(r.truncation), r.dirichlet, r.psinc,
                         r.discrepancy_db});
    }
    return table;
}

struct StudyRow {
    Method method;
    ErrorReport interior;
    ErrorReport edge;
};

/// Refined index m is interior when N/4 <= m/M <= 3N/4.
constexpr bool is_interior(std::size_t m, std::size_t factor, std::size_t length) noexcept
{
    return 4 * m >= length * factor && 4 * m <= 3 * length * factor;
}

/// Runs every method against the closed-form signal on t = m Ts / M.
inline std::vector<StudyRow> upsample_error_study(const SignalSpec& spec, std::size_t factor)
{
    detail::require(factor >= 2, "error study needs a factor of at least 2");
    const Sequence x = generate(spec);
    const std::size_t refined = factor * spec.length;

    std::vector<cplx> truth(refined);
    for (std::size_t m = 0; m < refined; ++m) {
        truth[m] = eval_ground_truth(spec, static_cast<double>(m) * spec.sample_period /
                                               static_cast<double>(factor));
    }

    std::vector<StudyRow> rows;
    for (const Method method : {Method::fast_fft, Method::dirichlet_direct, Method::sinc_direct}) {
        const Sequence y = upsample(x, UpsampleRequest(factor, method));
        std::vector<double> interior;
        std::vector<double> edge;
        for (std::size_t m = 0; m < refined; ++m) {
            const double e = std::abs(y[m] - truth[m]);
            (is_interior(m, factor, spec.length) ? interior : edge).push_back(e);
        }
        rows.push_back({method, summarize_errors(interior), summarize_errors(edge)});
    }
    return rows;
}

struct BenchRow {
    std::size_t length;
    Method method;
    double median_seconds;
};

/// Random complex samples, reproducible per (length, seed).
inline Sequence bench_input(std::size_t length, std::uint64_t seed = 0)
{
    SplitMix64 rng(seed ^ (0x5EEDULL * (length + 1)));
    std::vector<cplx> samples(length);
    for (auto& s : samples) {
        const double re = rng.symmetric();
        s = cplx(re, rng.symmetric());
    }
    return Sequence(std::move(samples), 1.0);
}

/// Median wall-clock time of each method; one warm-up run is discarded.
inline std::vector<BenchRow> bench_methods(std::span<const std::size_t> lengths, std::size_t factor,
                                           std::size_t repetitions,
                                           std::span<const Method> methods = {})
{
    detail::require(repetitions >= 3, "benchmarks need at least 3 repetitions");
    detail::require(factor >= 1, "upsampling factor must be at least 1");
    static constexpr Method kAll[] = {Method::fast_fft, Method::dirichlet_direct, Method::sinc_direct};
    if (methods.empty()) {
        methods = kAll;
    }

    std::vector<BenchRow> rows;
    for (const std::size_t n : lengths) {
        detail::require(n >= 1, "benchmark sizes must be at least 1");
        const Sequence x = bench_input(n);
        for (const Method method : methods) {
            const UpsampleRequest request(factor, method);
            std::vector<double> seconds;
            for (std::size_t rep = 0; rep <= repetitions; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                const Sequence y = upsample(x, request);
                const auto t1 = std::chrono::steady_clock::now();
                if (rep > 0) {
                    seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
                }
            }
            const auto mid = seconds.begin() + static_cast<std::ptrdiff_t>(seconds.size() / 2);
            std::nth_element(seconds.begin(), mid, seconds.end());
            double median = *mid;
            if (seconds.size() % 2 == 0) {
                median = 0.5 * (median + *std::max_element(seconds.begin(), mid));
            }
            rows.push_back({n, method, median});
        }
    }
    return rows;
}

inline const std::vector<std::string>& bench_table_columns()
{
    static const std::vector<std::string> columns{"N", "method", "median_seconds"};
    return columns;
}

inline std::vector<TableRow> to_table(std::span<const BenchRow> rows)
{
    std::vector<TableRow> table;
    for (const auto& r : rows) {
        table.push_back({static_cast<std::int64_t>(r.length), std::string(to_string(r.method)),
                         r.median_seconds});
    }
    return table;
}

} // namespace zpinterp
