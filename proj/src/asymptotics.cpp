#include "cumbound/asymptotics.hpp"

#include "cumbound/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace cumbound {

namespace {

long double newton_rho_cen() {
    // f(rho) = e^rho - 2 - rho is negative at 1 and positive at 1.5; Newton
    // from 1.0 with a bisection safeguard keeps iterates inside the bracket.
    long double lo = 1.0L, hi = 1.5L;
    long double rho = 1.0L;
    for (int iter = 0; iter < 200; ++iter) {
        const long double f = std::exp(rho) - 2.0L - rho;
        if (std::fabs(f) < 1e-19L) break;
        if (f > 0) hi = rho; else lo = rho;
        const long double step = f / (std::exp(rho) - 1.0L);
        long double next = rho - step;
        if (next <= lo || next >= hi) next = (lo + hi) / 2.0L;
        if (next == rho) break;
        rho = next;
    }
    return rho;
}

long double rho_precise(PartitionClass cls) {
    static const long double ln2 = std::log(2.0L);
    static const long double cen = newton_rho_cen();
    static const long double sym = std::log(2.0L + std::sqrt(3.0L));
    switch (cls) {
        case PartitionClass::All: return ln2;
        case PartitionClass::NoSingletons: return cen;
        case PartitionClass::EvenBlocks: return sym;
    }
    return ln2;
}

}  // namespace

RateConstant rate(PartitionClass cls) {
    RateConstant out;
    out.cls = cls;
    out.rho_precise = rho_precise(cls);
    out.rho = static_cast<double>(out.rho_precise);
    switch (cls) {
        case PartitionClass::All:
            out.defining_equation = "exp(rho) = 2";
            break;
        case PartitionClass::NoSingletons:
            out.defining_equation = "exp(rho) = 2 + rho";
            break;
        case PartitionClass::EvenBlocks:
            out.defining_equation = "cosh(rho) = 2";
            break;
    }
    return out;
}

namespace {

// log of the asymptotic coefficient; quiet -inf for the vanishing odd
// symmetric orders so exp() gives exactly 0.
long double log_asymptotic(PartitionClass cls, int n) {
    const long double rho = rho_precise(cls);
    long double value = std::lgamma(static_cast<long double>(n)) -
                        static_cast<long double>(n) * std::log(rho);
    if (cls == PartitionClass::EvenBlocks) value += std::log(2.0L);
    return value;
}

void check_order_for_class(PartitionClass cls, int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (cls != PartitionClass::All && n < 2) {
        throw std::invalid_argument("order must be >= 2 for this class");
    }
}

}  // namespace

double asymptotic_coefficient(PartitionClass cls, int n) {
    check_order_for_class(cls, n);
    if (cls == PartitionClass::EvenBlocks && n % 2 != 0) return 0.0;
    return static_cast<double>(std::exp(log_asymptotic(cls, n)));
}

long double log_asymptotic_coefficient(PartitionClass cls, int n) {
    check_order_for_class(cls, n);
    if (cls == PartitionClass::EvenBlocks && n % 2 != 0) {
        return -std::numeric_limits<long double>::infinity();
    }
    return log_asymptotic(cls, n);
}

std::vector<std::pair<int, double>> ratio_diagnostic(PartitionClass cls, int n_max) {
    if (n_max < 2) throw std::invalid_argument("ratio_diagnostic: n_max must be >= 2");
    if (n_max > kRatioDiagnosticCap) {
        throw std::invalid_argument("ratio_diagnostic: n_max exceeds cap " +
                                    std::to_string(kRatioDiagnosticCap));
    }
    std::vector<std::pair<int, double>> out;
    for (int n = 2; n <= n_max; ++n) {
        if (cls == PartitionClass::EvenBlocks && n % 2 != 0) continue;
        const Int exact = coefficient_mass(cls, n);
        const long double log_exact = std::log(to_long_double(exact));
        const long double ratio = std::exp(log_exact - log_asymptotic(cls, n));
        out.emplace_back(n, static_cast<double>(ratio));
    }
    return out;
}

std::vector<Rat> series_reciprocal(const std::vector<Rat>& u) {
    if (u.empty() || u[0] == 0) {
        throw std::invalid_argument("series_reciprocal: constant term must be nonzero");
    }
    std::vector<Rat> r(u.size());
    r[0] = Rat(1) / u[0];
    for (std::size_t n = 1; n < u.size(); ++n) {
        Rat acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += u[k] * r[n - k];
        r[n] = -acc / u[0];
    }
    return r;
}

std::vector<Rat> series_neg_log(const std::vector<Rat>& u) {
    if (u.empty() || u[0] != 1) {
        throw std::invalid_argument("series_neg_log: constant term must be 1");
    }
    // L = -log u satisfies u L' = -u'; solve the convolution for L' and
    // divide by n + 1 to recover L term by term.
    std::vector<Rat> lp(u.size() > 1 ? u.size() - 1 : 0);  // coefficients of L'
    std::vector<Rat> out(u.size());
    out[0] = 0;
    for (std::size_t n = 0; n + 1 < u.size(); ++n) {
        Rat acc = -Rat(static_cast<long>(n + 1)) * u[n + 1];
        for (std::size_t k = 1; k <= n; ++k) acc -= u[k] * lp[n - k];
        lp[n] = std::move(acc);
        out[n + 1] = lp[n] / Rat(static_cast<long>(n + 1));
    }
    return out;
}

namespace {

// [x^k] of (2 - e^x), (2 - e^x + x) or (2 - cosh x) up to order n_max.
std::vector<Rat> inner_series(PartitionClass cls, int n_max) {
    std::vector<Rat> u(static_cast<std::size_t>(n_max) + 1, Rat(0));
    u[0] = 1;  // 2 - 1
    for (int k = 1; k <= n_max; ++k) {
        if (cls == PartitionClass::EvenBlocks && k % 2 != 0) continue;
        u[static_cast<std::size_t>(k)] = Rat(-1) / Rat(factorial(k));
    }
    if (cls == PartitionClass::NoSingletons && n_max >= 1) u[1] += 1;  // + x
    return u;
}

}  // namespace

std::vector<Rat> egf_coefficients(PartitionClass cls, int n_max) {
    if (n_max < 0) throw std::invalid_argument("egf_coefficients: negative order");
    if (n_max > kEgfOrderCap) {
        throw std::invalid_argument("egf_coefficients: order exceeds cap " +
                                    std::to_string(kEgfOrderCap));
    }
    if (cls == PartitionClass::All) {
        // Reciprocal gives the ordered-Bell EGF 1/(2 - e^x); the mass series
        // follows from C_1 = 1 and C_n = 2 Bell(n-1), i.e. c_n = 2 r_{n-1}/n.
        const std::vector<Rat> bell = series_reciprocal(inner_series(cls, n_max));
        std::vector<Rat> out(static_cast<std::size_t>(n_max) + 1, Rat(0));
        if (n_max >= 1) out[1] = 1;
        for (int n = 2; n <= n_max; ++n) {
            out[static_cast<std::size_t>(n)] =
                Rat(2) * bell[static_cast<std::size_t>(n - 1)] / Rat(n);
        }
        return out;
    }
    return series_neg_log(inner_series(cls, n_max));
}

CoefficientTable egf_coefficient_table(PartitionClass cls, int max_order) {
    if (max_order < 1) throw std::invalid_argument("egf_coefficient_table: max_order must be >= 1");
    const std::vector<Rat> series = egf_coefficients(cls, max_order);
    CoefficientTable table;
    table.cls = cls;
    table.max_order = max_order;
    table.provenance = Provenance::EgfSeries;
    table.values.resize(static_cast<std::size_t>(max_order) + 1);
    for (int n = 1; n <= max_order; ++n) {
        const Rat scaled = series[static_cast<std::size_t>(n)] * Rat(factorial(n));
        if (boost::multiprecision::denominator(scaled) != 1) {
            throw std::logic_error("egf_coefficient_table: n! c_n is not an integer");
        }
        table.values[static_cast<std::size_t>(n)] = boost::multiprecision::numerator(scaled);
    }
    return table;
}

double cgf_radius_lower_bound(double rho, double L) {
    if (!(rho > 0)) throw std::invalid_argument("cgf_radius_lower_bound: rho must be positive");
    if (L < 0) throw std::invalid_argument("cgf_radius_lower_bound: L must be nonnegative");
    if (L == 0) return std::numeric_limits<double>::infinity();
    return rho / L;
}

EfficiencyGap efficiency_gap() {
    EfficiencyGap gap;
    const long double pi_half = std::acos(-1.0L) / 2.0L;
    const long double rho_sym = rho_precise(PartitionClass::EvenBlocks);
    gap.rho_sym = static_cast<double>(rho_sym);
    gap.pi_half = static_cast<double>(pi_half);
    gap.eta = static_cast<double>(rho_sym / pi_half);
    return gap;
}

double rademacher_rate(int two_m) {
    if (two_m < 2 || two_m % 2 != 0) {
        throw std::invalid_argument("rademacher_rate: order must be even and >= 2");
    }
    MomentSequence rademacher;
    rademacher.symmetric = true;
    rademacher.mean_known_zero = true;
    for (int n = 1; n <= two_m; ++n) rademacher.values.emplace_back(n % 2 == 0 ? 1 : 0);
    const CumulantSequence kappa = moments_to_cumulants(rademacher);
    const Rat normalized = boost::multiprecision::abs(kappa.cumulant(two_m)) / Rat(factorial(two_m));
    const long double rate = std::pow(to_long_double(normalized),
                                       -1.0L / static_cast<long double>(two_m));
    return static_cast<double>(rate);
}

}  // namespace cumbound
