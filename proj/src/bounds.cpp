#include "cumbound/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace cumbound {

namespace {

constexpr double kStrictnessRelTol = 1e-9;
constexpr long double kFloatSlack = 1e-12L;

void check_class_order(PartitionClass cls, int n) {
    if (n < 1) throw std::invalid_argument("bound order must be >= 1");
    if (cls != PartitionClass::All && n < 2) {
        throw std::invalid_argument("order must be >= 2 for the " +
                                    std::string(partition_class_name(cls)) + " class");
    }
}

}  // namespace

std::string_view moment_functional_name(MomentFunctionalKind kind) {
    switch (kind) {
        case MomentFunctionalKind::RawAbs: return "raw";
        case MomentFunctionalKind::CentralAbs: return "central";
        case MomentFunctionalKind::SymmetricAbs: return "symmetric";
    }
    return "?";
}

ForwardBound forward_bound(PartitionClass cls, int n, double moment_functional) {
    check_class_order(cls, n);
    if (!(moment_functional >= 0)) {
        throw std::invalid_argument("moment functional must be nonnegative");
    }
    ForwardBound out;
    if (cls == PartitionClass::EvenBlocks && n % 2 != 0) {
        out.coefficient = 0;
        out.value = 0.0;
        out.vanishes = true;
        return out;
    }
    out.coefficient = coefficient_mass(cls, n);
    out.value = to_double(Rat(out.coefficient)) * moment_functional;
    return out;
}

ForwardBoundExact forward_bound_exact(PartitionClass cls, int n, const Rat& moment_functional) {
    check_class_order(cls, n);
    if (moment_functional < 0) {
        throw std::invalid_argument("moment functional must be nonnegative");
    }
    ForwardBoundExact out;
    if (cls == PartitionClass::EvenBlocks && n % 2 != 0) {
        out.coefficient = 0;
        out.value = 0;
        out.vanishes = true;
        return out;
    }
    out.coefficient = coefficient_mass(cls, n);
    out.value = Rat(out.coefficient) * moment_functional;
    return out;
}

namespace {

BoundReport make_report(PartitionClass cls, MomentFunctionalKind kind, int n, const Rat& kappa,
                        const Value& functional) {
    BoundReport report;
    report.order = n;
    report.bound_class = cls;
    report.functional_kind = kind;
    const Rat kappa_abs = boost::multiprecision::abs(kappa);
    report.cumulant_abs = to_double(kappa_abs);

    if (cls == PartitionClass::EvenBlocks && n % 2 != 0) {
        report.coefficient = 0;
        report.moment_functional = to_double(functional);
        report.bound_value = 0.0;
        report.vanishes = true;
        report.exact = kappa_abs == 0;
        report.slack_ratio = 0.0;
        report.strict = false;
        return report;
    }

    if (is_exact(functional)) {
        const ForwardBoundExact fb = forward_bound_exact(cls, n, std::get<Rat>(functional));
        report.coefficient = fb.coefficient;
        report.moment_functional = to_double(std::get<Rat>(functional));
        report.bound_value = to_double(fb.value);
        report.exact = true;
        if (fb.value == 0) {
            report.slack_ratio = 0.0;
            report.strict = false;
            report.equality = kappa_abs == 0;
        } else {
            report.slack_ratio = to_double(Rat(kappa_abs / fb.value));
            report.strict = kappa_abs < fb.value;
            report.equality = kappa_abs == fb.value;
        }
    } else {
        const double f = std::get<double>(functional);
        const ForwardBound fb = forward_bound(cls, n, f);
        report.coefficient = fb.coefficient;
        report.moment_functional = f;
        report.bound_value = fb.value;
        report.exact = false;
        if (fb.value == 0.0) {
            report.slack_ratio = 0.0;
            report.strict = false;
            report.equality = report.cumulant_abs == 0.0;
        } else {
            report.slack_ratio = report.cumulant_abs / fb.value;
            report.strict = report.cumulant_abs < fb.value * (1.0 - kStrictnessRelTol);
            report.equality = std::abs(report.slack_ratio - 1.0) <= kStrictnessRelTol;
        }
    }
    return report;
}

}  // namespace

std::vector<BoundReport> bound_report(const MomentSequence& m, int n_max) {
    if (n_max < 1 || n_max > m.order()) {
        throw std::invalid_argument("bound_report: n_max out of range of the moment sequence");
    }
    if (static_cast<int>(m.abs_values.size()) < n_max) {
        throw std::invalid_argument("bound_report: absolute moments missing up to order " +
                                    std::to_string(n_max));
    }
    validate(m);

    const CumulantSequence kappa = moments_to_cumulants(m);
    const MomentSequence central = center_moments(m);
    const bool mean_zero = m.moment(1) == 0;

    std::vector<BoundReport> reports;
    for (int n = 1; n <= n_max; ++n) {
        const Rat& k_n = kappa.cumulant(n);
        if (m.symmetric) {
            reports.push_back(make_report(PartitionClass::EvenBlocks,
                                          MomentFunctionalKind::SymmetricAbs, n, k_n,
                                          m.abs_moment(n)));
        }
        if (n >= 2) {
            if (mean_zero) {
                reports.push_back(make_report(PartitionClass::NoSingletons,
                                              MomentFunctionalKind::CentralAbs, n, k_n,
                                              m.abs_moment(n)));
            } else if (n % 2 == 0) {
                // |X - m_1|^n = (X - m_1)^n for even n, so the central
                // absolute moment is the exact binomial central moment.
                reports.push_back(make_report(PartitionClass::NoSingletons,
                                              MomentFunctionalKind::CentralAbs, n, k_n,
                                              Value(central.moment(n))));
            }
        }
        reports.push_back(
            make_report(PartitionClass::All, MomentFunctionalKind::RawAbs, n, k_n,
                        m.abs_moment(n)));
    }
    return reports;
}

CumulantEnvelope envelope(const CumulantSequence& k) {
    const int n = k.order();
    if (n < 1) throw std::invalid_argument("envelope: empty cumulant sequence");
    long double best = 0.0L;
    for (int j = 1; j <= n; ++j) {
        const long double base = std::fabs(to_long_double(k.cumulant(j)));
        if (base == 0.0L) continue;
        const long double candidate =
            std::pow(base, static_cast<long double>(n) / static_cast<long double>(j));
        if (candidate > best) best = candidate;
    }
    CumulantEnvelope out;
    out.order = n;
    out.value = static_cast<double>(best);
    return out;
}

namespace {

double slack_of(long double lhs, long double rhs) {
    if (rhs == 0.0L) return lhs == 0.0L ? 0.0 : std::numeric_limits<double>::infinity();
    return static_cast<double>(lhs / rhs);
}

bool holds_with_tol(long double lhs, long double rhs) {
    return lhs <= rhs * (1.0L + kFloatSlack) + 1e-300L;
}

}  // namespace

ConverseReport converse_check(const CumulantSequence& k, const MomentSequence& m) {
    const int n = k.order();
    if (n < 1 || m.order() < n) {
        throw std::invalid_argument("converse_check: sequences must be aligned to the same order");
    }
    ConverseReport report;
    report.order = n;
    const CumulantEnvelope env = envelope(k);
    report.envelope_value = env.value;
    report.bell_count = bell_ordinary(n);
    report.no_singleton_count = no_singleton_bell(n);

    const MomentSequence central = center_moments(m);
    const long double raw_abs = std::fabs(to_long_double(m.moment(n)));
    const long double central_abs = std::fabs(to_long_double(central.moment(n)));
    const long double env_value = env.value;
    const long double raw_limit = to_long_double(report.bell_count) * env_value;
    const long double central_limit = to_long_double(report.no_singleton_count) * env_value;

    report.raw_moment_abs = static_cast<double>(raw_abs);
    report.central_moment_abs = static_cast<double>(central_abs);
    report.raw_limit = static_cast<double>(raw_limit);
    report.central_limit = static_cast<double>(central_limit);
    report.raw_slack = slack_of(raw_abs, raw_limit);
    report.central_slack = slack_of(central_abs, central_limit);
    report.raw_ok = holds_with_tol(raw_abs, raw_limit);
    report.central_ok = holds_with_tol(central_abs, central_limit);
    return report;
}

std::vector<ConverseReport> converse_sweep(const MomentSequence& m, int n_max) {
    if (n_max < 1 || n_max > m.order()) {
        throw std::invalid_argument("converse_sweep: n_max out of range");
    }
    const CumulantSequence kappa = moments_to_cumulants(m);
    std::vector<ConverseReport> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(converse_check(kappa.truncated(n), m.truncated(n)));
    }
    return out;
}

ForwardBound multivariate_bound(const MultiIndex& nu, std::span<const double> functionals,
                                PartitionClass cls) {
    nu.check();
    const int total = nu.total_order();
    if (static_cast<int>(functionals.size()) != nu.dimension()) {
        throw std::invalid_argument("multivariate_bound: functional/multi-index size mismatch");
    }
    check_class_order(cls, total);
    ForwardBound out;
    if (cls == PartitionClass::EvenBlocks && total % 2 != 0) {
        out.coefficient = 0;
        out.value = 0.0;
        out.vanishes = true;
        return out;
    }
    out.coefficient = coefficient_mass(cls, total);
    long double product = 1.0L;
    for (int j = 0; j < nu.dimension(); ++j) {
        const double f = functionals[static_cast<std::size_t>(j)];
        if (!(f >= 0)) throw std::invalid_argument("multivariate_bound: negative functional");
        const int power = nu.nu[static_cast<std::size_t>(j)];
        if (power == 0) continue;
        product *= std::pow(f, static_cast<long double>(power) / total);
    }
    out.value = static_cast<double>(to_long_double(out.coefficient) * product);
    return out;
}

bool holder_block_check(const MixedMomentTable& mixed, const MultiIndex& nu, int limit) {
    nu.check();
    const int total = nu.total_order();
    if (nu.dimension() != mixed.dimension) {
        throw std::invalid_argument("holder_block_check: multi-index dimension mismatch");
    }

    long double rhs = 1.0L;
    for (int j = 0; j < nu.dimension(); ++j) {
        const int power = nu.nu[static_cast<std::size_t>(j)];
        if (power == 0) continue;
        const long double mu_n = to_long_double(mixed.abs_moment(j, total));
        rhs *= std::pow(mu_n, static_cast<long double>(power) / total);
    }

    std::vector<int> slot_variable(static_cast<std::size_t>(total));
    {
        int slot = 0;
        for (int j = 0; j < nu.dimension(); ++j) {
            for (int r = 0; r < nu.nu[static_cast<std::size_t>(j)]; ++r) {
                slot_variable[static_cast<std::size_t>(slot++)] = j;
            }
        }
    }

    bool all_hold = true;
    std::vector<int> exponents(static_cast<std::size_t>(nu.dimension()));
    for_each_partition(
        total, PartitionClass::All,
        [&](const SetPartition& partition) {
            Rat product = 1;
            for (const auto& block : partition.blocks) {
                std::fill(exponents.begin(), exponents.end(), 0);
                for (int slot : block) {
                    ++exponents[static_cast<std::size_t>(
                        slot_variable[static_cast<std::size_t>(slot - 1)])];
                }
                product *= mixed.moment(exponents);
            }
            const long double lhs = std::fabs(to_long_double(product));
            if (!holds_with_tol(lhs, rhs)) {
                all_hold = false;
                return false;
            }
            return true;
        },
        limit);
    return all_hold;
}

}  // namespace cumbound
