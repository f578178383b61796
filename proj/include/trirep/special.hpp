#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>

#include "trirep/errors.hpp"

namespace trirep {

/// Neumaier-compensated accumulator; works for real and complex values.
template <typename T>
class CompensatedSum {
public:
    void add(const T& value) {
        if constexpr (std::is_floating_point_v<T>) {
            accumulate(sum_, carry_, value);
        } else {
            using R = typename T::value_type;
            R sr = sum_.real(), cr = carry_.real(), si = sum_.imag(), ci = carry_.imag();
            accumulate(sr, cr, value.real());
            accumulate(si, ci, value.imag());
            sum_ = T(sr, si);
            carry_ = T(cr, ci);
        }
    }
    T value() const { return sum_ + carry_; }

private:
    template <typename R>
    static void accumulate(R& sum, R& carry, R value) {
        R t = sum + value;
        if (std::abs(sum) >= std::abs(value))
            carry += (sum - t) + value;
        else
            carry += (value - t) + sum;
        sum = t;
    }

    T sum_{};
    T carry_{};
};

namespace detail {

// Lanczos approximation, g = 7, nine terms.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_coeffs[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

} // namespace detail

/// log Gamma(z) for complex z away from the non-positive integers. The
/// imaginary part is a continuous branch, not the principal one; only the
/// real part (log |Gamma|) is meant to be consumed.
template <typename Scalar>
std::complex<Scalar> log_gamma(std::complex<Scalar> z) {
    using C = std::complex<Scalar>;
    if (z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real())
        throw SingularError("log_gamma: pole at non-positive integer");

    // Shift to Re z >= 1 where the Lanczos series is accurate.
    C shift_log{0, 0};
    while (z.real() < 1) {
        shift_log += std::log(z);
        z += Scalar(1);
    }

    const C zm = z - Scalar(1);
    C series = C(Scalar(detail::lanczos_coeffs[0]), 0);
    for (int k = 1; k < 9; ++k)
        series += Scalar(detail::lanczos_coeffs[k]) / (zm + Scalar(k));
    const C t = zm + Scalar(detail::lanczos_g + 0.5);
    const Scalar half_log_2pi = Scalar(0.5) * std::log(Scalar(2) * std::numbers::pi_v<Scalar>);
    return half_log_2pi + (zm + Scalar(0.5)) * std::log(t) - t + std::log(series) - shift_log;
}

/// log |Gamma(mu + i y)|^2.
template <typename Scalar>
Scalar log_gamma_abs_squared(Scalar mu, Scalar y) {
    return Scalar(2) * log_gamma(std::complex<Scalar>(mu, y)).real();
}

/// |Gamma(mu + i y)|^2 for mu > 0. Even in y.
template <typename Scalar>
Scalar gamma_abs_squared(Scalar mu, Scalar y) {
    if (!(mu > 0))
        throw DomainError("gamma_abs_squared: mu must be positive");
    return std::exp(log_gamma_abs_squared(mu, y));
}

/// Terminating hypergeometric sum pFq(-n, upper...; lower...; z) with n+1 terms.
/// `upper` excludes the leading -n. Accumulated with compensated summation.
template <typename T>
T terminating_hypergeometric(int n, std::span<const T> upper, std::span<const T> lower, T z) {
    if (n < 0)
        throw DomainError("terminating_hypergeometric: n must be non-negative");
    CompensatedSum<T> sum;
    T term = T(1);
    sum.add(term);
    for (int k = 0; k < n; ++k) {
        T ratio = T(k - n) * z / T(k + 1);
        for (const T& u : upper)
            ratio *= u + T(k);
        for (const T& l : lower) {
            const T denom = l + T(k);
            if (denom == T(0))
                throw SingularError("terminating_hypergeometric: lower parameter hits a non-positive integer");
            ratio /= denom;
        }
        term *= ratio;
        sum.add(term);
    }
    return sum.value();
}

/// log of the Pochhammer ratio Gamma(n + a) / Gamma(a) for a > 0.
inline double log_rising(double a, int n) { return std::lgamma(a + n) - std::lgamma(a); }

} // namespace trirep
