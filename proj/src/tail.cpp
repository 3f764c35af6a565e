#include "cumbound/tail.hpp"

#include "cumbound/asymptotics.hpp"
#include "cumbound/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace cumbound {

void check(const BernsteinParams& p) {
    if (!(p.v > 0)) throw std::invalid_argument("BernsteinParams: v must be > 0");
    if (!(p.b >= 0)) throw std::invalid_argument("BernsteinParams: b must be >= 0");
}

double bernstein_tail(const BernsteinParams& p, double x, bool two_sided) {
    check(p);
    if (!(x > 0)) throw std::domain_error("bernstein_tail: x must be > 0");
    const double exponent = -x * x / (2.0 * (p.v + p.b * x));
    double bound = std::exp(exponent);
    if (two_sided) bound *= 2.0;
    return std::min(bound, 1.0);
}

double cgf_quadratic_bound(const BernsteinParams& p, double t) {
    check(p);
    if (t < 0) throw std::domain_error("cgf_quadratic_bound: t must be >= 0");
    if (p.b > 0 && t >= 1.0 / p.b) {
        throw std::domain_error("cgf_quadratic_bound: t outside [0, 1/b)");
    }
    return p.v * t * t / (2.0 * (1.0 - p.b * t));
}

double optimal_chernoff_point(const BernsteinParams& p, double x) {
    check(p);
    if (!(x > 0)) throw std::domain_error("optimal_chernoff_point: x must be > 0");
    return x / (p.v + p.b * x);
}

double ACenSweep::ratio_at(int n) const {
    if (n < 2 || n - 2 >= static_cast<int>(ratios.size())) {
        throw std::out_of_range("ACenSweep: order outside the sweep");
    }
    return ratios[static_cast<std::size_t>(n - 2)];
}

ACenSweep compute_A_cen(int n_max) {
    if (n_max < 2) throw std::invalid_argument("compute_A_cen: n_max must be >= 2");
    const long double rho = rate(PartitionClass::NoSingletons).rho_precise;
    ACenSweep sweep;
    sweep.ratios.reserve(static_cast<std::size_t>(n_max - 1));
    long double best = 1.0L;
    long double rho_power = rho;  // rho^n built incrementally
    for (int n = 2; n <= n_max; ++n) {
        rho_power *= rho;
        const long double exact = to_long_double(coefficient_mass(PartitionClass::NoSingletons, n));
        const long double ratio = exact * rho_power / to_long_double(factorial(n - 1));
        sweep.ratios.push_back(static_cast<double>(ratio));
        if (ratio > best) best = ratio;
    }
    sweep.value = static_cast<double>(best);
    return sweep;
}

DerivedParams derive_params(double v, double L, int n_max) {
    if (!(v > 0)) throw std::invalid_argument("derive_params: v must be > 0");
    if (!(L > 0)) throw std::invalid_argument("derive_params: L must be > 0");
    const long double rho = rate(PartitionClass::NoSingletons).rho_precise;
    DerivedParams out;
    out.a_cen = compute_A_cen(n_max).value;
    out.v_prime = static_cast<double>(out.a_cen * v / (rho * rho));
    out.b = static_cast<double>(L / rho);
    out.scale = L;
    out.variance = v;
    return out;
}

std::optional<int> validate_moment_growth(const ReferenceLaw& law, double v, double L, int n_max) {
    if (!(v > 0) || !(L > 0)) {
        throw std::invalid_argument("validate_moment_growth: v and L must be > 0");
    }
    if (n_max < 2) throw std::invalid_argument("validate_moment_growth: n_max must be >= 2");
    const Rat v_exact(v);
    const Rat L_exact(L);
    Rat budget = v_exact;  // v L^(n-2)
    for (int n = 2; n <= n_max; ++n) {
        const Value mu = law_abs_moment(law, n);
        if (is_exact(mu)) {
            if (std::get<Rat>(mu) > budget) return n;
        } else {
            if (std::get<double>(mu) > to_double(budget) * (1.0 + 1e-12)) return n;
        }
        budget *= L_exact;
    }
    return std::nullopt;
}

DerivedParams derive_params_checked(const ReferenceLaw& law, double v, double L, int n_max) {
    if (const auto violation = validate_moment_growth(law, v, L, n_max)) {
        throw std::invalid_argument("moment growth E|X|^n <= v L^(n-2) fails for " + law.name() +
                                    " at n = " + std::to_string(*violation));
    }
    return derive_params(v, L, n_max);
}

CumulantConditionResult cumulant_condition_check(const CumulantSequence& k,
                                                 const BernsteinParams& p) {
    check(p);
    if (k.order() < 1) throw std::invalid_argument("cumulant_condition_check: empty sequence");
    if (k.cumulant(1) != 0) {
        throw std::invalid_argument("cumulant_condition_check: sequence must be centered");
    }
    const Rat v_exact(p.v);
    const Rat b_exact(p.b);
    CumulantConditionResult result;
    result.ok = true;
    Rat b_power = 1;  // b^(n-2)
    for (int n = 2; n <= k.order(); ++n) {
        const Rat limit = Rat(factorial(n - 1)) * v_exact * b_power;
        if (boost::multiprecision::abs(k.cumulant(n)) > limit) {
            result.ok = false;
            result.first_violation = n;
            break;
        }
        b_power *= b_exact;
    }
    return result;
}

}  // namespace cumbound
