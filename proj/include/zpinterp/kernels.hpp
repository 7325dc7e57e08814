#pragma once

// Sinc, Dirichlet and truncated periodized-sinc kernels.
//
//   sinc(w)          = sin(w) / w
//   dirichlet(N, w)  = sin(N w / 2) / (N sin(w / 2))
//   psinc(N, L, w)   = sum_{l=-L..L} (-1)^((N-1) l) sinc(N (w - 2 pi l) / 2)
//
// psinc(N, L, w) -> dirichlet(N, w) as L -> infinity.

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "zpinterp/sequence.hpp"

namespace zpinterp {

/// Width of the window around a removable singularity inside which the
/// kernels switch to a series expansion.
inline constexpr double kSingularityWindow = 1e-9;

/// Dirichlet order N and periodized-sinc truncation L.
class KernelSpec {
public:
    explicit KernelSpec(std::size_t order, std::size_t truncation = 0)
        : order_(order), truncation_(truncation)
    {
        detail::require(order_ >= 1, "kernel order must be at least 1");
    }

    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] std::size_t truncation() const noexcept { return truncation_; }

private:
    std::size_t order_;
    std::size_t truncation_;
};

inline double sinc(double w)
{
    detail::require_finite(w, "sinc: argument must be finite");
    if (std::abs(w) < kSingularityWindow) {
        const double w2 = w * w;
        return 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
    }
    return std::sin(w) / w;
}

/// Evaluates the Dirichlet kernel of order spec.order().
///
/// The argument is reduced to w = 2 pi m + d with |d| <= pi, and the kernel is
/// evaluated as (-1)^(m (N-1)) sinc(N d / 2) / sinc(d / 2). This is the same
/// quotient as the defining formula, but stays accurate far from the origin
/// and is continuous through every multiple of 2 pi.
inline double dirichlet(const KernelSpec& spec, double w)
{
    detail::require_finite(w, "dirichlet: argument must be finite");
    const double m = std::nearbyint(w / kTwoPi);
    const double d = w - kTwoPi * m;
    const auto order = static_cast<double>(spec.order());

    const bool odd_period = std::fmod(std::abs(m), 2.0) == 1.0;
    const bool even_order = spec.order() % 2 == 0;
    const double sign = (odd_period && even_order) ? -1.0 : 1.0;

    if (std::abs(d) < kSingularityWindow) {
        return sign * sinc(order * d / 2.0) / sinc(d / 2.0);
    }
    return sign * std::sin(order * d / 2.0) / (order * std::sin(d / 2.0));
}

inline double dirichlet(std::size_t order, double w)
{
    return dirichlet(KernelSpec(order), w);
}

inline double psinc(const KernelSpec& spec, double w)
{
    detail::require_finite(w, "psinc: argument must be finite");
    const auto order = static_cast<double>(spec.order());
    const auto truncation = static_cast<std::int64_t>(spec.truncation());
    const bool alternating = spec.order() % 2 == 0;

    double sum = sinc(order * w / 2.0);
    for (std::int64_t l = 1; l <= truncation; ++l) {
        // (N - 1) * l is odd exactly when N is even and l is odd.
        const double sign = (alternating && (l % 2 != 0)) ? -1.0 : 1.0;
        const double shift = kTwoPi * static_cast<double>(l);
        sum += sign * (sinc(order * (w - shift) / 2.0) + sinc(order * (w + shift) / 2.0));
    }
    return sum;
}

inline double psinc(std::size_t order, std::size_t truncation, double w)
{
    return psinc(KernelSpec(order, truncation), w);
}

} // namespace zpinterp
