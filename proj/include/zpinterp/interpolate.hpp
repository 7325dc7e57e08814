#pragma once

// Interpolation of an N-sample record onto a refined grid.
//
// Three routes produce the same M*N output indexing (refined sample m sits at
// t = m * Ts / M):
//
//   fast-fft          phase rotation, N-point inverse transform, zero-pad,
//                     M*N-point forward transform, phase adjustment
//   dirichlet-direct  x3[m] = sum_k x[k] dirichlet(N, 2 pi (m - M k) / (M N))
//   sinc-direct       sum_n x[n] sinc(pi (t - n Ts) / Ts)
//
// fast-fft and dirichlet-direct are algebraically identical; sinc-direct is the
// truncated ideal reconstruction that the Dirichlet kernel approximates.

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zpinterp/kernels.hpp"
#include "zpinterp/sequence.hpp"
#include "zpinterp/transforms.hpp"

namespace zpinterp {

enum class Method { fast_fft, dirichlet_direct, sinc_direct };

inline std::string_view to_string(Method method)
{
    switch (method) {
    case Method::fast_fft: return "fast-fft";
    case Method::dirichlet_direct: return "dirichlet-direct";
    case Method::sinc_direct: return "sinc-direct";
    }
    return "unknown";
}

/// Accepts both the long names ("fast-fft") and the CLI short names ("fft").
inline Method parse_method(std::string_view name)
{
    if (name == "fft" || name == "fast-fft") {
        return Method::fast_fft;
    }
    if (name == "dirichlet" || name == "dirichlet-direct") {
        return Method::dirichlet_direct;
    }
    if (name == "sinc" || name == "sinc-direct") {
        return Method::sinc_direct;
    }
    throw std::domain_error("unknown interpolation method '" + std::string(name) + "'");
}

/// Integer upsampling factor M >= 1 and the route used to reach M*N samples.
class UpsampleRequest {
public:
    explicit UpsampleRequest(std::size_t factor, Method method = Method::fast_fft)
        : factor_(factor), method_(method)
    {
        detail::require(factor_ >= 1, "upsampling factor must be at least 1");
    }

    [[nodiscard]] std::size_t factor() const noexcept { return factor_; }
    [[nodiscard]] Method method() const noexcept { return method_; }
    [[nodiscard]] std::size_t output_length(std::size_t input_length) const noexcept
    {
        return factor_ * input_length;
    }

private:
    std::size_t factor_;
    Method method_;
};

namespace detail {

inline std::optional<double> refined_period(const Sequence& x, std::size_t factor)
{
    if (auto ts = x.sample_period()) {
        return *ts / static_cast<double>(factor);
    }
    return std::nullopt;
}

} // namespace detail

/// Truncated sinc reconstruction sum_{n<N} x[n] sinc(pi (t - n Ts) / Ts).
inline cplx sinc_interp(const Sequence& x, double t)
{
    const auto ts = x.sample_period();
    detail::require(ts.has_value(), "sinc_interp: sequence has no sample period");
    detail::require_finite(t, "sinc_interp: time must be finite");
    const double u = t / *ts;
    cplx acc{};
    for (std::size_t n = 0; n < x.size(); ++n) {
        acc += x[n] * sinc(kPi * (u - static_cast<double>(n)));
    }
    return acc;
}

/// Continuous DTFT reconstructed from its N DFT samples through the Dirichlet kernel:
/// sum_k X[k] exp(-j (N-1)(w - k w0) / 2) dirichlet(N, w - k w0).
inline cplx dirichlet_interp_spectrum(const SpectrumSamples& spectrum, double w)
{
    detail::require_finite(w, "dirichlet_interp_spectrum: frequency must be finite");
    const std::size_t n = spectrum.size();
    const KernelSpec kernel(n);
    const double w0 = spectrum.grid_spacing();
    const double half_span = static_cast<double>(n - 1) / 2.0;
    cplx acc{};
    for (std::size_t k = 0; k < n; ++k) {
        const double offset = w - static_cast<double>(k) * w0;
        const double phase = -half_span * offset;
        acc += spectrum[k] * cplx(std::cos(phase), std::sin(phase)) * dirichlet(kernel, offset);
    }
    return acc;
}

/// Fast zero-padding upsampler, O(MN log MN).
inline Sequence fft_upsample(const Sequence& x, std::size_t factor)
{
    detail::require(factor >= 1, "fft_upsample: factor must be at least 1");
    const std::size_t n = x.size();
    const std::size_t refined = factor * n;

    // Phase rotation exp(-j (N-1) n pi / N). The index is reduced mod 2N first
    // so the angle stays in [0, 2 pi).
    std::vector<cplx> work(refined, cplx{});
    for (std::size_t i = 0; i < n; ++i) {
        const auto reduced = static_cast<double>(((n - 1) * i) % (2 * n));
        const double angle = -kPi * reduced / static_cast<double>(n);
        work[i] = x[i] * cplx(std::cos(angle), std::sin(angle));
    }

    std::span<cplx> head(work.data(), n);
    detail::transform_in_place(head, Direction::inverse);
    detail::transform_in_place(work, Direction::forward);

    // Both transforms ran unnormalized. The forward 1/(MN) factor times the M
    // scale correction leaves 1/N, which makes M = 1 the identity.
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t m = 0; m < refined; ++m) {
        const auto reduced = static_cast<double>(((n - 1) * m) % (2 * refined));
        const double angle = kPi * reduced / static_cast<double>(refined);
        work[m] *= scale * cplx(std::cos(angle), std::sin(angle));
    }
    return Sequence(std::move(work), detail::refined_period(x, factor));
}

/// Direct O(N * MN) evaluation of the Dirichlet-kernel sum; the oracle for fft_upsample.
inline Sequence dirichlet_upsample_direct(const Sequence& x, std::size_t factor)
{
    detail::require(factor >= 1, "dirichlet_upsample_direct: factor must be at least 1");
    const std::size_t n = x.size();
    const std::size_t refined = factor * n;
    const KernelSpec kernel(n);
    std::vector<cplx> out(refined, cplx{});
    for (std::size_t m = 0; m < refined; ++m) {
        cplx acc{};
        for (std::size_t k = 0; k < n; ++k) {
            const double offset = static_cast<double>(m) - static_cast<double>(factor * k);
            acc += x[k] * dirichlet(kernel, kTwoPi * offset / static_cast<double>(refined));
        }
        out[m] = acc;
    }
    return Sequence(std::move(out), detail::refined_period(x, factor));
}

/// sinc_interp on the refined grid t = m Ts / M, m = 0..MN-1. A missing
/// sample period is taken as Ts = 1.
inline Sequence sinc_upsample_direct(const Sequence& x, std::size_t factor)
{
    detail::require(factor >= 1, "sinc_upsample_direct: factor must be at least 1");
    const Sequence timed =
        x.sample_period() ? x : Sequence({x.samples().begin(), x.samples().end()}, 1.0);
    const double ts = *timed.sample_period();
    const std::size_t refined = factor * x.size();
    std::vector<cplx> out(refined);
    for (std::size_t m = 0; m < refined; ++m) {
        out[m] = sinc_interp(timed, static_cast<double>(m) * ts / static_cast<double>(factor));
    }
    return Sequence(std::move(out), detail::refined_period(x, factor));
}

/// Frequency-domain zero-padding: the MN-point forward transform of zero_pad(x, MN).
inline SpectrumSamples spectrum_upsample(const Sequence& x, std::size_t factor)
{
    detail::require(factor >= 1, "spectrum_upsample: factor must be at least 1");
    return fft_forward(zero_pad(x, factor * x.size()));
}

inline Sequence upsample(const Sequence& x, const UpsampleRequest& request)
{
    switch (request.method()) {
    case Method::fast_fft: return fft_upsample(x, request.factor());
    case Method::dirichlet_direct: return dirichlet_upsample_direct(x, request.factor());
    case Method::sinc_direct: return sinc_upsample_direct(x, request.factor());
    }
    throw std::logic_error("upsample: unhandled method");
}

} // namespace zpinterp
