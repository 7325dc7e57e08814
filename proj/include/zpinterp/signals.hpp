#pragma once

// Deterministic test signals with closed-form continuous-time references.
//
// Frequencies are harmonic indices of the N-sample frame: harmonic h is
// exp(j 2 pi h t / (N Ts)). Pulse centers and widths are in sample units.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zpinterp/sequence.hpp"

namespace zpinterp {

/// SplitMix64 (Steele, Lea, Flood 2014). Written out so any implementation
/// reproduces the same stream from the same seed:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// uniform() maps the top 53 bits onto [0, 1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on [-1, 1).
    double symmetric() noexcept { return 2.0 * uniform() - 1.0; }

private:
    std::uint64_t state_;
};

enum class SignalKind { tone, multitone, bandlimited_random, gaussian_pulse };

inline std::string_view to_string(SignalKind kind)
{
    switch (kind) {
    case SignalKind::tone: return "tone";
    case SignalKind::multitone: return "multitone";
    case SignalKind::bandlimited_random: return "bandlimited-random";
    case SignalKind::gaussian_pulse: return "gaussian-pulse";
    }
    return "unknown";
}

inline SignalKind parse_signal_kind(std::string_view name)
{
    if (name == "tone") {
        return SignalKind::tone;
    }
    if (name == "multitone") {
        return SignalKind::multitone;
    }
    if (name == "bandlimited-random") {
        return SignalKind::bandlimited_random;
    }
    if (name == "gaussian-pulse") {
        return SignalKind::gaussian_pulse;
    }
    throw std::domain_error("unknown signal kind '" + std::string(name) + "'");
}

struct SignalSpec {
    SignalKind kind = SignalKind::tone;
    std::size_t length = 1;

    // tone / multitone. Harmonics may be fractional; amplitudes default to 1.
    std::vector<double> harmonics;
    std::vector<cplx> amplitudes;
    bool bandlimited = false;

    // bandlimited-random: integer harmonics -band..band with seeded amplitudes.
    // A negative band selects the widest legal band, floor((N - 1) / 2).
    long band = -1;
    std::uint64_t seed = 0;

    // gaussian-pulse
    double center = 0.0;
    double width = 1.0;

    double sample_period = 1.0;
};

namespace detail {

inline double max_harmonic(std::size_t length)
{
    return (static_cast<double>(length) - 1.0) / 2.0;
}

inline long effective_band(const SignalSpec& spec)
{
    if (spec.band < 0) {
        return static_cast<long>((spec.length - 1) / 2);
    }
    return spec.band;
}

/// exp(j 2 pi cycles), with whole cycles removed before the trig call.
inline cplx unit_phasor(double cycles)
{
    const double frac = cycles - std::nearbyint(cycles);
    const double angle = kTwoPi * frac;
    return {std::cos(angle), std::sin(angle)};
}

} // namespace detail

inline void validate(const SignalSpec& spec)
{
    detail::require(spec.length >= 1, "signal length must be at least 1");
    detail::require(std::isfinite(spec.sample_period) && spec.sample_period > 0.0,
                    "signal sample period must be positive");
    const double limit = detail::max_harmonic(spec.length);

    switch (spec.kind) {
    case SignalKind::tone:
    case SignalKind::multitone:
        detail::require(!spec.harmonics.empty(), "tone signals need at least one harmonic");
        detail::require(spec.kind != SignalKind::tone || spec.harmonics.size() == 1,
                        "a tone has exactly one harmonic");
        detail::require(spec.amplitudes.empty() || spec.amplitudes.size() == spec.harmonics.size(),
                        "amplitude count must match harmonic count");
        for (double h : spec.harmonics) {
            detail::require_finite(h, "harmonics must be finite");
            if (spec.bandlimited) {
                detail::require(std::abs(h) <= limit, "harmonic exceeds the band limit (N - 1) / 2");
            }
        }
        break;
    case SignalKind::bandlimited_random:
        detail::require(static_cast<double>(detail::effective_band(spec)) <= limit,
                        "harmonic exceeds the band limit (N - 1) / 2");
        break;
    case SignalKind::gaussian_pulse:
        detail::require(std::isfinite(spec.center), "pulse center must be finite");
        detail::require(std::isfinite(spec.width) && spec.width > 0.0, "pulse width must be positive");
        break;
    }
}

/// The (harmonic, amplitude) pairs that make up an exponential-sum signal.
inline std::vector<std::pair<double, cplx>> tone_components(const SignalSpec& spec)
{
    validate(spec);
    std::vector<std::pair<double, cplx>> parts;
    if (spec.kind == SignalKind::bandlimited_random) {
        SplitMix64 rng(spec.seed);
        const long band = detail::effective_band(spec);
        for (long h = -band; h <= band; ++h) {
            const double re = rng.symmetric();
            const double im = rng.symmetric();
            parts.emplace_back(static_cast<double>(h), cplx(re, im));
        }
    } else if (spec.kind != SignalKind::gaussian_pulse) {
        for (std::size_t i = 0; i < spec.harmonics.size(); ++i) {
            const cplx a = spec.amplitudes.empty() ? cplx(1.0) : spec.amplitudes[i];
            parts.emplace_back(spec.harmonics[i], a);
        }
    }
    return parts;
}

namespace detail {

inline cplx evaluate(const SignalSpec& spec, const std::vector<std::pair<double, cplx>>& parts,
                     double t)
{
    const double u = t / spec.sample_period;
    if (spec.kind == SignalKind::gaussian_pulse) {
        const double z = (u - spec.center) / spec.width;
        return {std::exp(-0.5 * z * z), 0.0};
    }
    const auto frame = static_cast<double>(spec.length);
    cplx acc{};
    for (const auto& [h, a] : parts) {
        acc += a * unit_phasor(h * u / frame);
    }
    return acc;
}

} // namespace detail

/// Closed-form x_c(t).
inline cplx eval_ground_truth(const SignalSpec& spec, double t)
{
    detail::require_finite(t, "ground truth time must be finite");
    return detail::evaluate(spec, tone_components(spec), t);
}

/// N samples of the closed form at t = n Ts.
inline Sequence generate(const SignalSpec& spec)
{
    const auto parts = tone_components(spec);
    std::vector<cplx> samples(spec.length);
    for (std::size_t n = 0; n < spec.length; ++n) {
        samples[n] = detail::evaluate(spec, parts, static_cast<double>(n) * spec.sample_period);
    }
    return Sequence(std::move(samples), spec.sample_period);
}

} // namespace zpinterp
