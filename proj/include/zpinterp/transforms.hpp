#pragma once

// Discrete Fourier analysis under a single normalization convention:
//
//   forward  X[k] = (1/N) sum_n x[n] exp(-j 2 pi n k / N)
//   inverse  x[n] =       sum_k X[k] exp(+j 2 pi n k / N)
//
// The quadratic-time dft_naive / idft_naive pair is the reference; fft() is
// the O(N log N) route for every length (radix-2 for powers of two, chirp-z
// embedding into a power-of-two convolution otherwise).

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "zpinterp/sequence.hpp"

namespace zpinterp {

enum class Direction { forward, inverse };

namespace detail {

constexpr bool is_power_of_two(std::size_t n) noexcept
{
    return n != 0 && (n & (n - 1)) == 0;
}

constexpr std::size_t next_power_of_two(std::size_t n) noexcept
{
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

constexpr double direction_sign(Direction dir) noexcept
{
    return dir == Direction::forward ? -1.0 : 1.0;
}

/// exp(sign * j * 2 pi * numerator / denominator), numerator already reduced.
inline cplx unit_root(std::uint64_t numerator, std::uint64_t denominator, double sign)
{
    const double angle = kTwoPi * static_cast<double>(numerator) / static_cast<double>(denominator);
    return {std::cos(angle), sign * std::sin(angle)};
}

/// Table of exp(sign * j 2 pi i / n), i = 0..n-1.
inline std::vector<cplx> root_table(std::size_t n, double sign)
{
    std::vector<cplx> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        roots[i] = unit_root(i, n, sign);
    }
    return roots;
}

struct Radix2Plan {
    std::size_t length = 0;
    std::vector<std::size_t> bit_reverse;
    std::vector<cplx> twiddles; // length / 2 entries

    Radix2Plan(std::size_t n, Direction dir) : length(n), bit_reverse(n), twiddles(n / 2)
    {
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < n) {
            ++bits;
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < bits; ++b) {
                r |= ((i >> b) & 1U) << (bits - 1 - b);
            }
            bit_reverse[i] = r;
        }
        const double sign = direction_sign(dir);
        for (std::size_t k = 0; k < n / 2; ++k) {
            twiddles[k] = unit_root(k, n, sign);
        }
    }

    void execute(std::span<cplx> data) const
    {
        for (std::size_t i = 0; i < length; ++i) {
            if (i < bit_reverse[i]) {
                std::swap(data[i], data[bit_reverse[i]]);
            }
        }
        for (std::size_t span = 2; span <= length; span <<= 1) {
            const std::size_t half = span / 2;
            const std::size_t stride = length / span;
            for (std::size_t start = 0; start < length; start += span) {
                for (std::size_t k = 0; k < half; ++k) {
                    const cplx t = twiddles[k * stride] * data[start + k + half];
                    data[start + k + half] = data[start + k] - t;
                    data[start + k] += t;
                }
            }
        }
    }
};

struct ChirpPlan {
    std::size_t length = 0;
    std::vector<cplx> chirp;           // exp(sign j pi k^2 / N)
    std::vector<cplx> filter_spectrum; // FFT of conj(chirp), wrapped to the padded length
    std::shared_ptr<const Radix2Plan> padded_forward;
    std::shared_ptr<const Radix2Plan> padded_inverse;

    void execute(std::span<cplx> data) const
    {
        const std::size_t padded = filter_spectrum.size();
        std::vector<cplx> work(padded, cplx{});
        for (std::size_t k = 0; k < length; ++k) {
            work[k] = data[k] * chirp[k];
        }
        padded_forward->execute(work);
        for (std::size_t i = 0; i < padded; ++i) {
            work[i] *= filter_spectrum[i];
        }
        padded_inverse->execute(work);
        const double scale = 1.0 / static_cast<double>(padded);
        for (std::size_t k = 0; k < length; ++k) {
            data[k] = work[k] * scale * chirp[k];
        }
    }
};

/// Process-wide plan cache keyed by (length, direction).
///
/// Readers take a shared lock; a miss builds the plan outside the lock and the
/// first writer to publish wins, so concurrent first use is safe.
class PlanCache {
public:
    static PlanCache& instance()
    {
        static PlanCache cache;
        return cache;
    }

    std::shared_ptr<const Radix2Plan> radix2(std::size_t n, Direction dir)
    {
        return lookup(radix2_, n, dir, [&] { return std::make_shared<const Radix2Plan>(n, dir); });
    }

    std::shared_ptr<const ChirpPlan> chirp(std::size_t n, Direction dir)
    {
        return lookup(chirp_, n, dir, [&] { return build_chirp(n, dir); });
    }

    [[nodiscard]] std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return radix2_.size() + chirp_.size();
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        radix2_.clear();
        chirp_.clear();
    }

private:
    using Key = std::pair<std::size_t, Direction>;

    template <class Plan, class Build>
    std::shared_ptr<const Plan> lookup(std::map<Key, std::shared_ptr<const Plan>>& table,
                                       std::size_t n, Direction dir, Build&& build)
    {
        const Key key{n, dir};
        {
            std::shared_lock lock(mutex_);
            if (auto it = table.find(key); it != table.end()) {
                return it->second;
            }
        }
        auto plan = build();
        std::unique_lock lock(mutex_);
        return table.emplace(key, std::move(plan)).first->second;
    }

    std::shared_ptr<const ChirpPlan> build_chirp(std::size_t n, Direction dir)
    {
        auto plan = std::make_shared<ChirpPlan>();
        plan->length = n;
        const std::size_t padded = next_power_of_two(2 * n - 1);
        const double sign = direction_sign(dir);

        // k^2 reduced mod 2N keeps the chirp phase exact for large k.
        plan->chirp.resize(n);
        const std::uint64_t modulus = 2 * static_cast<std::uint64_t>(n);
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t kk = static_cast<std::uint64_t>(k) % modulus;
            plan->chirp[k] = unit_root((kk * kk) % modulus, modulus, sign);
        }

        std::vector<cplx> filter(padded, cplx{});
        filter[0] = std::conj(plan->chirp[0]);
        for (std::size_t k = 1; k < n; ++k) {
            filter[k] = std::conj(plan->chirp[k]);
            filter[padded - k] = filter[k];
        }
        plan->padded_forward = radix2(padded, Direction::forward);
        plan->padded_inverse = radix2(padded, Direction::inverse);
        plan->padded_forward->execute(filter);
        plan->filter_spectrum = std::move(filter);
        return plan;
    }

    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const Radix2Plan>> radix2_;
    std::map<Key, std::shared_ptr<const ChirpPlan>> chirp_;
};

/// Unnormalized transform sum_n x[n] exp(sign j 2 pi n k / N), in place.
inline void transform_in_place(std::span<cplx> data, Direction dir)
{
    const std::size_t n = data.size();
    if (n <= 1) {
        return;
    }
    auto& cache = PlanCache::instance();
    if (is_power_of_two(n)) {
        cache.radix2(n, dir)->execute(data);
    } else {
        cache.chirp(n, dir)->execute(data);
    }
}

inline std::vector<cplx> naive_transform(std::span<const cplx> input, Direction dir)
{
    const std::size_t n = input.size();
    const auto roots = root_table(n, direction_sign(dir));
    std::vector<cplx> out(n, cplx{});
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{};
        for (std::size_t i = 0; i < n; ++i) {
            acc += input[i] * roots[(i * k) % n];
        }
        out[k] = acc;
    }
    return out;
}

} // namespace detail

/// Quadratic-time forward DFT with the 1/N factor.
inline SpectrumSamples dft_naive(const Sequence& x)
{
    auto values = detail::naive_transform(x.samples(), Direction::forward);
    const double scale = 1.0 / static_cast<double>(x.size());
    for (auto& v : values) {
        v *= scale;
    }
    return SpectrumSamples(std::move(values));
}

/// Quadratic-time inverse DFT, unnormalized.
inline Sequence idft_naive(const SpectrumSamples& spectrum)
{
    return Sequence(detail::naive_transform(spectrum.values(), Direction::inverse));
}

/// Fast transform of any length >= 1 with the same conventions as the naive pair:
/// forward carries 1/N, inverse carries no factor.
inline std::vector<cplx> fft(std::span<const cplx> input, Direction dir)
{
    detail::require(!input.empty(), "fft: input must not be empty");
    std::vector<cplx> data(input.begin(), input.end());
    detail::transform_in_place(data, dir);
    if (dir == Direction::forward) {
        const double scale = 1.0 / static_cast<double>(data.size());
        for (auto& v : data) {
            v *= scale;
        }
    }
    return data;
}

inline SpectrumSamples fft_forward(const Sequence& x)
{
    return SpectrumSamples(fft(x.samples(), Direction::forward));
}

inline Sequence fft_inverse(const SpectrumSamples& spectrum)
{
    return Sequence(fft(spectrum.values(), Direction::inverse));
}

inline Sequence zero_pad(const Sequence& x, std::size_t new_length)
{
    detail::require(new_length >= x.size(), "zero_pad: new length is shorter than the sequence");
    std::vector<cplx> padded(new_length, cplx{});
    std::copy(x.samples().begin(), x.samples().end(), padded.begin());
    return Sequence(std::move(padded), x.sample_period());
}

/// Normalized DTFT (1/N) sum_n x[n] exp(-j n w) at an arbitrary frequency.
inline cplx dtft_at(const Sequence& x, double w)
{
    detail::require_finite(w, "dtft_at: frequency must be finite");
    cplx acc{};
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double phase = -static_cast<double>(n) * w;
        acc += x[n] * cplx(std::cos(phase), std::sin(phase));
    }
    return acc / static_cast<double>(x.size());
}

} // namespace zpinterp
