#pragma once

#include "cumbound/combinatorics.hpp"
#include "cumbound/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cumbound {

/// Dominant-singularity radius of the coefficient EGF for a partition class.
struct RateConstant {
    PartitionClass cls;
    double rho = 0.0;
    long double rho_precise = 0.0L;
    std::string defining_equation;
};

/// ln 2 (All), the positive root of e^rho = 2 + rho (NoSingletons, safeguarded
/// Newton on [1, 1.5]), or ln(2 + sqrt 3) = arcosh 2 (EvenBlocks).
RateConstant rate(PartitionClass cls);

/// Leading-order approximant of the coefficient mass:
///   (n-1)!/rho^n for All and NoSingletons, 2 (n-1)!/rho^n for even orders of
/// EvenBlocks (0 for odd orders). Evaluated in log space.
double asymptotic_coefficient(PartitionClass cls, int n);

/// Natural log of the approximant, for orders where the value itself
/// overflows double (-inf at vanishing odd symmetric orders).
long double log_asymptotic_coefficient(PartitionClass cls, int n);

inline constexpr int kRatioDiagnosticCap = 200;

/// (n, exact/asymptotic) for n = 2..n_max (even n only for EvenBlocks).
/// Ratios are formed in extended precision from exact integer numerators.
std::vector<std::pair<int, double>> ratio_diagnostic(PartitionClass cls, int n_max);

inline constexpr int kEgfOrderCap = 64;

/// Coefficients of 1/u for a power series u with u[0] != 0.
std::vector<Rat> series_reciprocal(const std::vector<Rat>& u);

/// Coefficients of -log(u) for a power series u with u[0] == 1, via the
/// derivative convolution recurrence (no term-by-term integration).
std::vector<Rat> series_neg_log(const std::vector<Rat>& u);

/// c_0..c_N with n! c_n = coefficient_mass(cls, n): the exact truncated
/// expansion of the class EGF. NoSingletons and EvenBlocks expand
/// -log(2 - e^x + x) and -log(2 - cosh x) directly; All goes through the
/// series reciprocal 1/(2 - e^x) (the ordered-Bell EGF) and the identity
/// C_n = 2 Bell(n-1). N is capped at kEgfOrderCap.
std::vector<Rat> egf_coefficients(PartitionClass cls, int n_max);

/// Coefficient table with EgfSeries provenance (n! times the EGF series);
/// third independent route next to the counting DP and brute enumeration.
CoefficientTable egf_coefficient_table(PartitionClass cls, int max_order);

/// rho / L, the guaranteed radius of absolute convergence of the cumulant
/// generating series under moment growth rate L; infinity when L = 0.
double cgf_radius_lower_bound(double rho, double L);

struct EfficiencyGap {
    double rho_sym = 0.0;
    double pi_half = 0.0;
    double eta = 0.0;  // rho_sym / (pi/2)
};

EfficiencyGap efficiency_gap();

/// Empirical growth rate |kappa_{2m}/(2m)!|^(-1/(2m)) extracted from the
/// exact Rademacher cumulants; approaches pi/2 from above as m grows.
double rademacher_rate(int two_m);

}  // namespace cumbound
