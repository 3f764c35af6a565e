#pragma once

#include "cumbound/distributions.hpp"
#include "cumbound/numeric.hpp"
#include "cumbound/transforms.hpp"

#include <optional>
#include <vector>

namespace cumbound {

/// Parameters of the cumulant condition |kappa_n| <= (n-1)! v b^(n-2).
/// b = 0 is the sub-Gaussian limit of the formulas (CGF domain [0, 1/b)
/// becomes the whole half-line).
struct BernsteinParams {
    double v = 0.0;
    double b = 0.0;
};

void check(const BernsteinParams& p);

/// exp(-x^2 / (2 (v + b x))), doubled when two_sided, capped at 1.
double bernstein_tail(const BernsteinParams& p, double x, bool two_sided = false);

/// The quadratic CGF majorant v t^2 / (2 (1 - b t)) on [0, 1/b).
double cgf_quadratic_bound(const BernsteinParams& p, double t);

/// The Chernoff-optimal exponent location t_x = x / (v + b x).
double optimal_chernoff_point(const BernsteinParams& p, double x);

/// Finite-sweep constant A_cen = max(1, max_{2<=n<=n_max} Ccen(n) rho^n/(n-1)!)
/// with the per-order ratio sequence exposed for inspection. The ratio trend
/// peaks at n = 2 and oscillates toward 1, so deeper sweeps do not increase
/// the value beyond the observed maximum.
struct ACenSweep {
    double value = 1.0;
    std::vector<double> ratios;  // ratios[i] is the value at order n = i + 2

    double ratio_at(int n) const;
};

ACenSweep compute_A_cen(int n_max = 64);

/// Bernstein parameters derived from the centered coefficient family:
/// v' = A_cen v / rho_cen^2, b = L / rho_cen.
struct DerivedParams {
    double v_prime = 0.0;
    double b = 0.0;
    double a_cen = 1.0;
    double scale = 0.0;     // the caller's L
    double variance = 0.0;  // the caller's v

    BernsteinParams params() const { return BernsteinParams{v_prime, b}; }
};

/// The moment growth assumption E|X|^n <= v L^(n-2) is caller-asserted; use
/// validate_moment_growth to test it against a reference law.
DerivedParams derive_params(double v, double L, int n_max = 64);

/// First order 2 <= n <= n_max at which E|X|^n > v L^(n-2) for the law,
/// or nullopt when the growth assumption holds throughout. Exact where the
/// law's absolute moments are exact.
std::optional<int> validate_moment_growth(const ReferenceLaw& law, double v, double L, int n_max);

/// derive_params after checking the growth assumption against the law;
/// throws std::invalid_argument naming the violating order.
DerivedParams derive_params_checked(const ReferenceLaw& law, double v, double L, int n_max = 64);

/// Checks |kappa_n| <= (n-1)! v b^(n-2) for 2 <= n <= order. Requires a
/// centered sequence (kappa_1 = 0). The comparison is exact: v and b convert
/// losslessly from binary doubles to rationals.
struct CumulantConditionResult {
    bool ok = false;
    std::optional<int> first_violation;
};

CumulantConditionResult cumulant_condition_check(const CumulantSequence& k,
                                                 const BernsteinParams& p);

}  // namespace cumbound
