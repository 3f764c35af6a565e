#include "cumbound/distributions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cumbound {

std::string ReferenceLaw::name() const {
    switch (kind) {
        case LawKind::Rademacher: return "rademacher";
        case LawKind::Gaussian: return "gaussian:sigma=" + format_rational(param);
        case LawKind::Bernoulli: return "bernoulli:p=" + format_rational(param);
        case LawKind::Poisson: return "poisson:lambda=" + format_rational(param);
        case LawKind::Exponential: return "exponential:rate=" + format_rational(param);
        case LawKind::Uniform: return "uniform:a=" + format_rational(param);
    }
    return "?";
}

bool ReferenceLaw::symmetric() const {
    return kind == LawKind::Rademacher || kind == LawKind::Gaussian || kind == LawKind::Uniform;
}

bool ReferenceLaw::mean_zero() const {
    if (symmetric()) return true;
    if (kind == LawKind::Bernoulli || kind == LawKind::Poisson) return param == 0;
    return false;
}

bool ReferenceLaw::exact_abs_moments() const { return kind != LawKind::Gaussian; }

bool ReferenceLaw::unit_absolute_moments() const { return kind == LawKind::Rademacher; }

ReferenceLaw rademacher() { return ReferenceLaw{LawKind::Rademacher, 1}; }

ReferenceLaw gaussian(const Rat& sigma) {
    if (sigma < 0) throw std::invalid_argument("gaussian: sigma must be >= 0");
    return ReferenceLaw{LawKind::Gaussian, sigma};
}

ReferenceLaw bernoulli(const Rat& p) {
    if (p < 0 || p > 1) throw std::invalid_argument("bernoulli: p must lie in [0, 1]");
    return ReferenceLaw{LawKind::Bernoulli, p};
}

ReferenceLaw poisson(const Rat& lambda) {
    if (lambda <= 0) throw std::invalid_argument("poisson: lambda must be > 0");
    return ReferenceLaw{LawKind::Poisson, lambda};
}

ReferenceLaw exponential(const Rat& rate) {
    if (rate <= 0) throw std::invalid_argument("exponential: rate must be > 0");
    return ReferenceLaw{LawKind::Exponential, rate};
}

ReferenceLaw uniform_symmetric(const Rat& half_width) {
    if (half_width < 0) throw std::invalid_argument("uniform: half-width must be >= 0");
    return ReferenceLaw{LawKind::Uniform, half_width};
}

std::vector<std::string> law_registry() {
    return {"rademacher",        "gaussian:sigma=<r>",   "bernoulli:p=<r>",
            "poisson:lambda=<r>", "exponential:rate=<r>", "uniform:a=<r>"};
}

ReferenceLaw parse_law(std::string_view spec) {
    const auto fail = [&] {
        std::string message = "unknown law '" + std::string(spec) + "'; registry:";
        for (const auto& entry : law_registry()) message += " " + entry;
        throw std::invalid_argument(message);
    };

    std::string_view name = spec;
    std::string_view args;
    if (auto colon = spec.find(':'); colon != std::string_view::npos) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }

    auto param_value = [&](std::initializer_list<std::string_view> keys,
                           std::optional<Rat> fallback) -> Rat {
        if (args.empty()) {
            if (fallback) return *fallback;
            fail();
        }
        auto eq = args.find('=');
        std::string_view key = eq == std::string_view::npos ? std::string_view{} : args.substr(0, eq);
        std::string_view value = eq == std::string_view::npos ? args : args.substr(eq + 1);
        bool key_ok = eq == std::string_view::npos;
        for (auto k : keys) key_ok = key_ok || key == k;
        if (!key_ok) fail();
        try {
            return parse_rational(value);
        } catch (const std::invalid_argument&) {
            fail();
        }
        return 0;  // unreachable
    };

    if (name == "rademacher") {
        if (!args.empty()) fail();
        return rademacher();
    }
    if (name == "gaussian" || name == "normal") return gaussian(param_value({"sigma"}, Rat(1)));
    if (name == "bernoulli") return bernoulli(param_value({"p"}, Rat(1, 2)));
    if (name == "poisson") return poisson(param_value({"lambda"}, Rat(1)));
    if (name == "exponential") return exponential(param_value({"rate", "lambda"}, Rat(1)));
    if (name == "uniform") return uniform_symmetric(param_value({"a"}, Rat(1)));
    fail();
    return rademacher();  // unreachable
}

namespace {

Rat rat_pow(const Rat& base, int exponent) {
    Rat out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

// Touchard-style recurrence m_{n+1} = lambda sum_k C(n,k) m_k.
Rat poisson_moment(const Rat& lambda, int n) {
    std::vector<Rat> m{Rat(1)};
    for (int i = 0; i < n; ++i) {
        Rat next = 0;
        for (int k = 0; k <= i; ++k) next += Rat(binomial(i, k)) * m[static_cast<std::size_t>(k)];
        m.push_back(lambda * next);
    }
    return m[static_cast<std::size_t>(n)];
}

CumulantSequence law_cumulants_via_transforms(const ReferenceLaw& law, int n_max) {
    MomentSequence m;
    m.values.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) m.values.push_back(law_moment(law, n));
    return moments_to_cumulants(m);
}

}  // namespace

Rat law_moment(const ReferenceLaw& law, int n) {
    if (n < 0) throw std::invalid_argument("law_moment: negative order");
    if (n == 0) return 1;
    switch (law.kind) {
        case LawKind::Rademacher:
            return n % 2 == 0 ? 1 : 0;
        case LawKind::Gaussian:
            if (n % 2 != 0) return 0;
            return Rat(double_factorial(n - 1)) * rat_pow(law.param, n);
        case LawKind::Bernoulli:
            return law.param;
        case LawKind::Poisson:
            return poisson_moment(law.param, n);
        case LawKind::Exponential:
            return Rat(factorial(n)) / rat_pow(law.param, n);
        case LawKind::Uniform:
            if (n % 2 != 0) return 0;
            return rat_pow(law.param, n) / Rat(n + 1);
    }
    throw std::logic_error("law_moment: unhandled law");
}

Value law_abs_moment(const ReferenceLaw& law, int n) {
    if (n < 1) throw std::invalid_argument("law_abs_moment: order must be >= 1");
    switch (law.kind) {
        case LawKind::Rademacher:
            return Value(Rat(1));
        case LawKind::Gaussian: {
            if (n % 2 == 0) return Value(law_moment(law, n));
            // E|X|^(2k+1) = sigma^(2k+1) 2^k k! sqrt(2/pi): float path only.
            const int k = (n - 1) / 2;
            const double scale = to_double(rat_pow(law.param, n) * Rat(factorial(k)) *
                                           Rat(Int(1) << k));
            return Value(scale * std::sqrt(2.0 / std::acos(-1.0)));
        }
        case LawKind::Bernoulli:
        case LawKind::Poisson:
        case LawKind::Exponential:
            return Value(law_moment(law, n));  // nonnegative support
        case LawKind::Uniform:
            return Value(rat_pow(law.param, n) / Rat(n + 1));
    }
    throw std::logic_error("law_abs_moment: unhandled law");
}

Rat law_cumulant(const ReferenceLaw& law, int n) {
    if (n < 1) throw std::invalid_argument("law_cumulant: order must be >= 1");
    switch (law.kind) {
        case LawKind::Gaussian:
            if (n == 1) return 0;
            if (n == 2) return law.param * law.param;
            return 0;
        case LawKind::Poisson:
            return law.param;
        case LawKind::Exponential:
            return Rat(factorial(n - 1)) / rat_pow(law.param, n);
        case LawKind::Rademacher:
        case LawKind::Bernoulli:
        case LawKind::Uniform:
            return law_cumulants_via_transforms(law, n).cumulant(n);
    }
    throw std::logic_error("law_cumulant: unhandled law");
}

MomentSequence law_moment_sequence(const ReferenceLaw& law, int n_max) {
    if (n_max < 1) throw std::invalid_argument("law_moment_sequence: n_max must be >= 1");
    MomentSequence m;
    m.symmetric = law.symmetric();
    m.mean_known_zero = law.mean_zero();
    m.values.reserve(static_cast<std::size_t>(n_max));
    m.abs_values.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        m.values.push_back(law_moment(law, n));
        m.abs_values.push_back(law_abs_moment(law, n));
    }
    validate(m);
    return m;
}

LawVerification verify_law(const ReferenceLaw& law, int n_max) {
    LawVerification out;
    const MomentSequence m = law_moment_sequence(law, n_max);
    out.bounds = bound_report(m, n_max);
    out.converse = converse_sweep(m, n_max);
    if (law.unit_absolute_moments()) out.gap = efficiency_gap();

    out.all_ok = true;
    for (const auto& report : out.bounds) {
        if (report.vanishes) {
            if (report.cumulant_abs != 0.0) out.all_ok = false;
            continue;
        }
        if (report.slack_ratio > 1.0 + 1e-9) out.all_ok = false;
    }
    for (const auto& report : out.converse) {
        if (!report.raw_ok || !report.central_ok) out.all_ok = false;
    }
    return out;
}

namespace {

class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace

std::vector<double> sample(const ReferenceLaw& law, std::size_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
    SampleStream stream(seed);
    std::vector<double> out;
    out.reserve(count);

    const double p = to_double(law.param);
    for (std::size_t i = 0; i < count; ++i) {
        switch (law.kind) {
            case LawKind::Rademacher:
                out.push_back(stream.uniform() < 0.5 ? -1.0 : 1.0);
                break;
            case LawKind::Bernoulli:
                out.push_back(stream.uniform() < p ? 1.0 : 0.0);
                break;
            case LawKind::Uniform:
                out.push_back(p * (2.0 * stream.uniform() - 1.0));
                break;
            case LawKind::Exponential:
                out.push_back(-std::log1p(-stream.uniform()) / p);
                break;
            case LawKind::Gaussian: {
                // Box-Muller, cosine branch; two draws per sample keeps the
                // stream a simple function of the index.
                const double u1 = stream.uniform();
                const double u2 = stream.uniform();
                out.push_back(p * std::sqrt(-2.0 * std::log1p(-u1)) *
                              std::cos(2.0 * std::acos(-1.0) * u2));
                break;
            }
            case LawKind::Poisson: {
                const double threshold = std::exp(-p);
                int k = -1;
                double product = 1.0;
                do {
                    ++k;
                    product *= stream.uniform();
                } while (product > threshold);
                out.push_back(static_cast<double>(k));
                break;
            }
        }
    }
    return out;
}

std::vector<double> empirical_moments(std::span<const double> samples, int n_max) {
    if (samples.empty()) throw std::invalid_argument("empirical_moments: no samples");
    if (n_max < 1) throw std::invalid_argument("empirical_moments: n_max must be >= 1");
    std::vector<double> sums(static_cast<std::size_t>(n_max), 0.0);
    for (double x : samples) {
        double power = 1.0;
        for (int k = 0; k < n_max; ++k) {
            power *= x;
            sums[static_cast<std::size_t>(k)] += power;
        }
    }
    for (double& s : sums) s /= static_cast<double>(samples.size());
    return sums;
}

}  // namespace cumbound
