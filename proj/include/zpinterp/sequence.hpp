#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zpinterp {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace detail {

inline void require(bool condition, const char* what)
{
    if (!condition) {
        throw std::domain_error(what);
    }
}

inline void require_finite(double value, const char* what)
{
    require(std::isfinite(value), what);
}

} // namespace detail

/// Ordered complex samples x[n] with an optional sample period in seconds.
///
/// Always holds at least one sample and every sample is finite.
class Sequence {
public:
    explicit Sequence(std::vector<cplx> samples, std::optional<double> sample_period = std::nullopt)
        : samples_(std::move(samples)), sample_period_(sample_period)
    {
        detail::require(!samples_.empty(), "sequence must hold at least one sample");
        for (const auto& s : samples_) {
            detail::require(std::isfinite(s.real()) && std::isfinite(s.imag()),
                            "sequence samples must be finite");
        }
        if (sample_period_) {
            detail::require(std::isfinite(*sample_period_) && *sample_period_ > 0.0,
                            "sample period must be positive and finite");
        }
    }

    static Sequence from_real(std::span<const double> values,
                              std::optional<double> sample_period = std::nullopt)
    {
        return Sequence(std::vector<cplx>(values.begin(), values.end()), sample_period);
    }

    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    [[nodiscard]] std::span<const cplx> samples() const noexcept { return samples_; }
    [[nodiscard]] const cplx& operator[](std::size_t n) const { return samples_[n]; }
    [[nodiscard]] std::optional<double> sample_period() const noexcept { return sample_period_; }

    /// Time span T = (N - 1) * Ts, if the sample period is known.
    [[nodiscard]] std::optional<double> duration() const
    {
        if (!sample_period_) {
            return std::nullopt;
        }
        return static_cast<double>(size() - 1) * *sample_period_;
    }

    [[nodiscard]] double max_abs() const noexcept
    {
        double m = 0.0;
        for (const auto& s : samples_) {
            m = std::max(m, std::abs(s));
        }
        return m;
    }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<cplx> samples_;
    std::optional<double> sample_period_;
};

/// DFT samples X[k] on the grid w_k = k * (2 pi / N).
class SpectrumSamples {
public:
    explicit SpectrumSamples(std::vector<cplx> values) : values_(std::move(values))
    {
        detail::require(!values_.empty(), "spectrum must hold at least one value");
    }

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const cplx> values() const noexcept { return values_; }
    [[nodiscard]] const cplx& operator[](std::size_t k) const { return values_[k]; }
    [[nodiscard]] double grid_spacing() const noexcept
    {
        return kTwoPi / static_cast<double>(values_.size());
    }

    friend bool operator==(const SpectrumSamples&, const SpectrumSamples&) = default;

private:
    std::vector<cplx> values_;
};

} // namespace zpinterp
