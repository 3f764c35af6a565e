#include "cumbound/asymptotics.hpp"
#include "cumbound/bounds.hpp"
#include "cumbound/combinatorics.hpp"
#include "cumbound/distributions.hpp"
#include "cumbound/numeric.hpp"
#include "cumbound/output.hpp"
#include "cumbound/tail.hpp"
#include "cumbound/transforms.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace cumbound;

constexpr int kExitOk = 0;
constexpr int kExitInvariantViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Rat> parse_rational_list(const std::string& text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        std::string token = text.substr(start, comma - start);
        // trim spaces
        while (!token.empty() && token.front() == ' ') token.erase(token.begin());
        while (!token.empty() && token.back() == ' ') token.pop_back();
        try {
            out.push_back(parse_rational(token));
        } catch (const std::invalid_argument&) {
            throw UsageError("cannot parse rational token '" + token + "'");
        }
        start = comma + 1;
        if (comma == text.size()) break;
    }
    if (out.empty()) throw UsageError("empty value list");
    return out;
}

PartitionClass class_from_flag(const std::string& name) {
    if (name == "raw") return PartitionClass::All;
    if (name == "cen") return PartitionClass::NoSingletons;
    if (name == "sym") return PartitionClass::EvenBlocks;
    throw UsageError("unknown class '" + name + "' (expected raw, cen, sym or all-three)");
}

std::string class_column(PartitionClass cls) {
    switch (cls) {
        case PartitionClass::All: return "craw";
        case PartitionClass::NoSingletons: return "ccen";
        case PartitionClass::EvenBlocks: return "csym";
    }
    return "?";
}

std::string scientific_from_log(long double log_value) {
    if (std::isinf(log_value) && log_value < 0) return "0";
    const long double log10_value = log_value / std::log(10.0L);
    long double exponent10 = std::floor(log10_value);
    long double mantissa = std::pow(10.0L, log10_value - exponent10);
    if (mantissa >= 10.0L) {
        mantissa /= 10.0L;
        exponent10 += 1.0L;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6Lfe%+d", mantissa, static_cast<int>(exponent10));
    return buf;
}

void emit(const OutputRecord& record, OutputFormat format) {
    std::cout << render(record, format);
}

// ---- coeffs ---------------------------------------------------------------

int run_coeffs(const std::string& class_flag, int max_n, const std::string& format_name,
               bool with_asymptotic, bool scientific) {
    const OutputFormat format = parse_format(format_name);
    if (max_n < 2) throw UsageError("--max-n must be >= 2");

    std::vector<PartitionClass> classes;
    if (class_flag == "all-three") {
        classes = {PartitionClass::All, PartitionClass::NoSingletons, PartitionClass::EvenBlocks};
    } else {
        classes = {class_from_flag(class_flag)};
    }

    OutputRecord record;
    record.command = "coeffs";
    for (int n = 2; n <= max_n; ++n) {
        Row row;
        row.add("n", static_cast<std::int64_t>(n));
        for (PartitionClass cls : classes) {
            const bool vanishes = cls == PartitionClass::EvenBlocks && n % 2 != 0;
            const Int value = vanishes ? Int(0) : coefficient_mass(cls, n);
            const std::string column = class_column(cls);
            row.add(column, value);
            if (with_asymptotic) {
                const double approx = asymptotic_coefficient(cls, n);
                if (scientific && !vanishes && std::isinf(approx)) {
                    row.add(column + "_asymptotic",
                            scientific_from_log(log_asymptotic_coefficient(cls, n)));
                } else {
                    row.add(column + "_asymptotic", approx);
                }
                double ratio = 0.0;
                if (!vanishes) {
                    const long double log_exact = std::log(to_long_double(value));
                    ratio = static_cast<double>(
                        std::exp(log_exact - log_asymptotic_coefficient(cls, n)));
                }
                row.add(column + "_ratio", ratio);
            }
        }
        record.rows.push_back(std::move(row));
    }
    emit(record, format);
    return kExitOk;
}

// ---- transform ------------------------------------------------------------

int run_transform(const std::string& moments_text, const std::string& cumulants_text,
                  const std::string& direction, const std::string& format_name) {
    const OutputFormat format = parse_format(format_name);
    const bool have_moments = !moments_text.empty();
    const bool have_cumulants = !cumulants_text.empty();
    if (have_moments == have_cumulants) {
        throw UsageError("provide exactly one of --moments or --cumulants");
    }
    if (!direction.empty()) {
        if (direction != "to-cumulants" && direction != "to-moments") {
            throw UsageError("--direction must be to-cumulants or to-moments");
        }
        if (have_moments && direction != "to-cumulants") {
            throw UsageError("--moments input implies --direction to-cumulants");
        }
        if (have_cumulants && direction != "to-moments") {
            throw UsageError("--cumulants input implies --direction to-moments");
        }
    }

    std::vector<Rat> moments, cumulants;
    if (have_moments) {
        MomentSequence m;
        m.values = parse_rational_list(moments_text);
        moments = m.values;
        cumulants = moments_to_cumulants(m).values;
    } else {
        CumulantSequence k;
        k.values = parse_rational_list(cumulants_text);
        cumulants = k.values;
        moments = cumulants_to_moments(k).values;
    }

    OutputRecord record;
    record.command = "transform";
    for (std::size_t i = 0; i < moments.size(); ++i) {
        Row row;
        row.add("n", static_cast<std::int64_t>(i + 1));
        row.add("moment", moments[i]);
        row.add("cumulant", cumulants[i]);
        record.rows.push_back(std::move(row));
    }
    emit(record, format);
    return kExitOk;
}

// ---- bound ----------------------------------------------------------------

void add_forward_row(OutputRecord& record, const BoundReport& report) {
    Row row;
    row.add("kind", std::string("forward"));
    row.add("n", static_cast<std::int64_t>(report.order));
    row.add("family", std::string(moment_functional_name(report.functional_kind)));
    row.add("cumulant_abs", report.cumulant_abs);
    row.add("coefficient", report.coefficient);
    row.add("functional", report.moment_functional);
    row.add("bound", report.bound_value);
    row.add("slack", report.slack_ratio);
    row.add("strict", report.strict);
    row.add("equality", report.equality);
    row.add("vanishes", report.vanishes);
    row.add("exact", report.exact);
    record.rows.push_back(std::move(row));
}

void add_converse_row(OutputRecord& record, const ConverseReport& report) {
    Row row;
    row.add("kind", std::string("converse"));
    row.add("n", static_cast<std::int64_t>(report.order));
    row.add("envelope", report.envelope_value);
    row.add("raw_abs", report.raw_moment_abs);
    row.add("bell", report.bell_count);
    row.add("raw_limit", report.raw_limit);
    row.add("raw_slack", report.raw_slack);
    row.add("raw_ok", report.raw_ok);
    row.add("central_abs", report.central_moment_abs);
    row.add("bell_no_singleton", report.no_singleton_count);
    row.add("central_limit", report.central_limit);
    row.add("central_slack", report.central_slack);
    row.add("central_ok", report.central_ok);
    record.rows.push_back(std::move(row));
}

int run_bound(const std::string& law_spec, const std::string& moments_text,
              const std::string& abs_text, bool mean_zero, bool symmetric, int max_n,
              bool with_converse, const std::string& format_name) {
    const OutputFormat format = parse_format(format_name);
    if (law_spec.empty() == moments_text.empty()) {
        throw UsageError("provide exactly one of --law or --moments");
    }

    MomentSequence m;
    if (!law_spec.empty()) {
        ReferenceLaw law = parse_law(law_spec);
        if (max_n < 1) throw UsageError("--max-n must be >= 1");
        m = law_moment_sequence(law, max_n);
    } else {
        m.values = parse_rational_list(moments_text);
        if (!abs_text.empty()) {
            std::vector<Rat> abs_list = parse_rational_list(abs_text);
            if (abs_list.size() != m.values.size()) {
                throw UsageError("--abs-moments must have the same length as --moments");
            }
            m.abs_values.assign(abs_list.begin(), abs_list.end());
        }
        m.mean_known_zero = mean_zero;
        m.symmetric = symmetric;
        if (max_n < 1) max_n = m.order();
        if (max_n > m.order()) throw UsageError("--max-n exceeds the supplied sequence length");
        if (!m.has_abs_values() && !with_converse) {
            throw UsageError("forward bounds need --abs-moments (or use --converse, which "
                             "works from raw moments alone)");
        }
    }

    OutputRecord record;
    record.command = "bound";
    bool violation = false;

    if (m.has_abs_values()) {
        for (const auto& report : bound_report(m, max_n)) {
            add_forward_row(record, report);
            if (report.vanishes) {
                if (report.cumulant_abs != 0.0) violation = true;
            } else if (report.slack_ratio > 1.0 + 1e-9) {
                violation = true;
            }
        }
    }
    if (with_converse) {
        for (const auto& report : converse_sweep(m, max_n)) {
            add_converse_row(record, report);
            if (!report.raw_ok || !report.central_ok) violation = true;
        }
    }

    emit(record, format);
    if (violation) {
        std::cerr << "internal invariant violation: a proved inequality failed numerically\n";
        return kExitInvariantViolation;
    }
    return kExitOk;
}

// ---- tail -----------------------------------------------------------------

int run_tail(double v, double b, const std::vector<double>& xs, bool two_sided,
             const std::string& derive_text, int sweep_n, const std::string& format_name) {
    const OutputFormat format = parse_format(format_name);
    OutputRecord record;
    record.command = "tail";

    if (!derive_text.empty()) {
        if (v != 0.0 || b != 0.0) throw UsageError("--derive is exclusive of --v/--b");
        const std::vector<Rat> parts = parse_rational_list(derive_text);
        if (parts.size() != 2) throw UsageError("--derive expects 'v,L'");
        const double dv = to_double(parts[0]);
        const double dl = to_double(parts[1]);
        DerivedParams derived;
        try {
            derived = derive_params(dv, dl, sweep_n);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        Row row;
        row.add("kind", std::string("derived"));
        row.add("v", dv);
        row.add("L", dl);
        row.add("a_cen", derived.a_cen);
        row.add("rho_cen", rate(PartitionClass::NoSingletons).rho);
        row.add("v_prime", derived.v_prime);
        row.add("b", derived.b);
        record.rows.push_back(std::move(row));
        for (double x : xs) {
            Row tail_row;
            tail_row.add("kind", std::string("tail"));
            tail_row.add("x", x);
            tail_row.add("two_sided", two_sided);
            tail_row.add("bound", bernstein_tail(derived.params(), x, two_sided));
            record.rows.push_back(std::move(tail_row));
        }
        emit(record, format);
        return kExitOk;
    }

    if (!(v > 0)) throw UsageError("--v must be > 0 (or use --derive)");
    if (b < 0) throw UsageError("--b must be >= 0");
    if (xs.empty()) throw UsageError("at least one --x is required");
    const BernsteinParams params{v, b};
    for (double x : xs) {
        if (!(x > 0)) throw UsageError("--x must be > 0");
        Row row;
        row.add("kind", std::string("tail"));
        row.add("v", v);
        row.add("b", b);
        row.add("x", x);
        row.add("two_sided", two_sided);
        row.add("bound", bernstein_tail(params, x, two_sided));
        row.add("optimal_t", optimal_chernoff_point(params, x));
        record.rows.push_back(std::move(row));
    }
    emit(record, format);
    return kExitOk;
}

// ---- rates ----------------------------------------------------------------

int run_rates(int precision, const std::string& format_name) {
    const OutputFormat format = parse_format(format_name);
    if (precision < 1 || precision > 17) throw UsageError("--precision must lie in [1, 17]");
    OutputRecord record;
    record.command = "rates";
    const std::pair<PartitionClass, std::string> cases[] = {
        {PartitionClass::All, "raw"},
        {PartitionClass::NoSingletons, "cen"},
        {PartitionClass::EvenBlocks, "sym"},
    };
    for (const auto& [cls, label] : cases) {
        const RateConstant rc = rate(cls);
        char fixed[64];
        std::snprintf(fixed, sizeof(fixed), "%.*f", precision, rc.rho);
        double residual = 0.0;
        switch (cls) {
            case PartitionClass::All:
                residual = static_cast<double>(std::fabs(std::exp(rc.rho_precise) - 2.0L));
                break;
            case PartitionClass::NoSingletons:
                residual = static_cast<double>(
                    std::fabs(std::exp(rc.rho_precise) - 2.0L - rc.rho_precise));
                break;
            case PartitionClass::EvenBlocks:
                residual = static_cast<double>(std::fabs(std::cosh(rc.rho_precise) - 2.0L));
                break;
        }
        Row row;
        row.add("case", label);
        row.add("rho", std::string(fixed));
        row.add("rho_full", rc.rho);
        row.add("defining_equation", rc.defining_equation);
        row.add("residual", residual);
        record.rows.push_back(std::move(row));
    }
    emit(record, format);
    return kExitOk;
}

// ---- sample ---------------------------------------------------------------

int run_sample(const std::string& law_spec, std::size_t count, std::uint64_t seed, int max_n,
               const std::string& format_name) {
    const OutputFormat format = parse_format(format_name);
    if (law_spec.empty()) throw UsageError("--law is required");
    if (count < 1) throw UsageError("--count must be >= 1");
    if (max_n < 1) throw UsageError("--max-n must be >= 1");
    const ReferenceLaw law = parse_law(law_spec);
    const std::vector<double> draws = sample(law, count, seed);
    const std::vector<double> estimates = empirical_moments(draws, max_n);

    OutputRecord record;
    record.command = "sample";
    for (int n = 1; n <= max_n; ++n) {
        Row row;
        row.add("n", static_cast<std::int64_t>(n));
        row.add("empirical_moment", estimates[static_cast<std::size_t>(n - 1)]);
        const Rat exact = law_moment(law, n);
        row.add("exact_moment", exact);
        row.add("abs_error", std::abs(estimates[static_cast<std::size_t>(n - 1)] - to_double(exact)));
        record.rows.push_back(std::move(row));
    }
    emit(record, format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cumbound: exact cumulant-bound coefficients, moment transforms, "
                 "bound reports, asymptotic rates and Bernstein tail calculators"};
    app.require_subcommand(1);

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "Exact bound coefficients per order");
    std::string coeffs_class;
    int coeffs_max_n = 0;
    std::string coeffs_format = "table";
    bool coeffs_asymptotic = false;
    bool coeffs_scientific = false;
    coeffs->add_option("--class", coeffs_class, "raw, cen, sym or all-three")->required();
    coeffs->add_option("--max-n", coeffs_max_n, "largest order (>= 2)")->required();
    coeffs->add_option("--format", coeffs_format, "json, csv or table");
    coeffs->add_flag("--asymptotic", coeffs_asymptotic, "include approximant and ratio columns");
    coeffs->add_flag("--scientific", coeffs_scientific,
                     "render overflowing approximants from log space");

    // transform
    auto* transform = app.add_subcommand("transform", "Exact moment <-> cumulant conversion");
    std::string tr_moments, tr_cumulants, tr_direction;
    std::string tr_format = "table";
    transform->add_option("--moments", tr_moments, "comma-separated rationals m_1..m_n");
    transform->add_option("--cumulants", tr_cumulants, "comma-separated rationals k_1..k_n");
    transform->add_option("--direction", tr_direction, "to-cumulants or to-moments");
    transform->add_option("--format", tr_format, "json, csv or table");

    // bound
    auto* bound = app.add_subcommand("bound", "Forward bound report and converse checks");
    std::string bd_law, bd_moments, bd_abs;
    bool bd_mean_zero = false, bd_symmetric = false, bd_converse = false;
    int bd_max_n = 0;
    std::string bd_format = "table";
    bound->add_option("--law", bd_law, "reference law, e.g. gaussian:sigma=1");
    bound->add_option("--moments", bd_moments, "raw moments as comma-separated rationals");
    bound->add_option("--abs-moments", bd_abs, "absolute moments matching --moments");
    bound->add_flag("--mean-zero", bd_mean_zero, "assert E[X] = 0 for --moments input");
    bound->add_flag("--symmetric", bd_symmetric, "assert symmetry for --moments input");
    bound->add_option("--max-n", bd_max_n, "largest order");
    bound->add_flag("--converse", bd_converse, "include envelope converse rows");
    bound->add_option("--format", bd_format, "json, csv or table");

    // tail
    auto* tail = app.add_subcommand("tail", "Bernstein tail bounds from cumulant conditions");
    double tl_v = 0.0, tl_b = 0.0;
    std::vector<double> tl_x;
    bool tl_two_sided = false;
    std::string tl_derive;
    int tl_sweep = 64;
    std::string tl_format = "table";
    tail->add_option("--v", tl_v, "variance-scale parameter v");
    tail->add_option("--b", tl_b, "scale parameter b");
    tail->add_option("--x", tl_x, "deviation(s) x > 0");
    tail->add_flag("--two-sided", tl_two_sided, "bound P(|X| >= x) instead of P(X >= x)");
    tail->add_option("--derive", tl_derive, "derive (v', b) from 'v,L' via the centered family");
    tail->add_option("--sweep-n", tl_sweep, "A_cen sweep depth (default 64)");
    tail->add_option("--format", tl_format, "json, csv or table");

    // rates
    auto* rates = app.add_subcommand("rates", "Singularity rate constants per class");
    int rt_precision = 6;
    std::string rt_format = "table";
    rates->add_option("--precision", rt_precision, "decimal digits (default 6)");
    rates->add_option("--format", rt_format, "json, csv or table");

    // sample
    auto* smp = app.add_subcommand("sample", "Seeded sampling sanity check");
    std::string sm_law;
    std::size_t sm_count = 100000;
    std::uint64_t sm_seed = 1;
    int sm_max_n = 4;
    std::string sm_format = "table";
    smp->add_option("--law", sm_law, "reference law")->required();
    smp->add_option("--count", sm_count, "number of samples");
    smp->add_option("--seed", sm_seed, "generator seed");
    smp->add_option("--max-n", sm_max_n, "largest empirical moment order");
    smp->add_option("--format", sm_format, "json, csv or table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (coeffs->parsed()) {
            return run_coeffs(coeffs_class, coeffs_max_n, coeffs_format, coeffs_asymptotic,
                              coeffs_scientific);
        }
        if (transform->parsed()) {
            return run_transform(tr_moments, tr_cumulants, tr_direction, tr_format);
        }
        if (bound->parsed()) {
            return run_bound(bd_law, bd_moments, bd_abs, bd_mean_zero, bd_symmetric, bd_max_n,
                             bd_converse, bd_format);
        }
        if (tail->parsed()) {
            return run_tail(tl_v, tl_b, tl_x, tl_two_sided, tl_derive, tl_sweep, tl_format);
        }
        if (rates->parsed()) return run_rates(rt_precision, rt_format);
        if (smp->parsed()) return run_sample(sm_law, sm_count, sm_seed, sm_max_n, sm_format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariantViolation;
    }
    return kExitUsage;
}
