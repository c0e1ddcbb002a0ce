#pragma once

#include <cmath>
#include <stdexcept>

namespace lorflow {

/// Small-angle threshold below which the sin/cos ratio forms switch to
/// series expansions.
inline constexpr double kSmallAngle = 1e-6;

/// Normalized determinant threshold for singularity verdicts.
inline constexpr double kSingularTol = 1e-8;

namespace detail {
inline void require_theta_lt_pi(double theta) {
    if (!(std::abs(theta) < M_PI))
        throw std::domain_error("theta must satisfy |theta| < pi");
}
/// sin(z)/z, series below the cancellation regime.
inline double sinc(double z) {
    if (std::abs(z) < 1e-4) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}
} // namespace detail

/// lambda(x, theta) = sin(x*theta)/sin(theta), continued by x at theta = 0.
inline double lambda_fn(double x, double theta) {
    detail::require_theta_lt_pi(theta);
    if (std::abs(theta) < kSmallAngle) {
        const double t2 = theta * theta;
        const double x2 = x * x;
        return x * (1.0 + (x2 - 1.0) * t2 / 6.0 +
                    (3.0 * x2 * x2 - 10.0 * x2 + 7.0) * t2 * t2 / 360.0);
    }
    return std::sin(x * theta) / std::sin(theta);
}

/// d lambda / d theta = (x sin(theta) cos(x theta) - sin(x theta) cos(theta))
/// / sin^2(theta); value 0 at theta = 0.
inline double dlambda_dtheta(double x, double theta) {
    detail::require_theta_lt_pi(theta);
    if (std::abs(theta) < kSmallAngle) {
        const double x2 = x * x;
        return x * (1.0 - x2) * theta / 3.0 +
               x * (3.0 * x2 * x2 - 10.0 * x2 + 7.0) * theta * theta * theta / 90.0;
    }
    const double s = std::sin(theta);
    return (x * s * std::cos(x * theta) - std::sin(x * theta) * std::cos(theta)) / (s * s);
}

/// mu(x, theta) = cos(x*theta)/cos(theta), defined for |theta| < pi/2.
inline double mu_fn(double x, double theta) {
    if (!(std::abs(theta) < M_PI / 2.0))
        throw std::domain_error("mu_fn: |theta| must be < pi/2");
    return std::cos(x * theta) / std::cos(theta);
}

/// sigma(x, theta) = cos((1-x)theta)/sin(theta) - x/sin(x theta), the
/// coefficient that reduces the flowed derivative matrix to the
/// lambda-combination plus a multiple of n_0 without changing the
/// determinant. sigma(x, 0) = sigma(1/2, theta) = sigma(1, theta) = 0.
inline double sigma_fn(double x, double theta) {
    detail::require_theta_lt_pi(theta);
    if (std::abs(theta) < kSmallAngle) {
        const double a = 1.0 - x;
        const double c1 = (1.0 - x * x) / 6.0 - a * a / 2.0;
        const double c3 = 7.0 * (1.0 - x * x * x * x) / 360.0 - a * a / 12.0 + a * a * a * a / 24.0;
        return theta * c1 + theta * theta * theta * c3;
    }
    // x/sin(x theta) = 1/(theta * sinc(x theta)) stays finite as x -> 0.
    return std::cos((1.0 - x) * theta) / std::sin(theta) -
           1.0 / (theta * detail::sinc(x * theta));
}

} // namespace lorflow
