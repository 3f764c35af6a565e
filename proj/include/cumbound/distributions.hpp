#pragma once

#include "cumbound/asymptotics.hpp"
#include "cumbound/bounds.hpp"
#include "cumbound/numeric.hpp"
#include "cumbound/transforms.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cumbound {

enum class LawKind { Rademacher, Gaussian, Bernoulli, Poisson, Exponential, Uniform };

/// One of the closed-form reference laws. The registry is closed: user
/// distributions enter only as raw moment sequences.
struct ReferenceLaw {
    LawKind kind = LawKind::Rademacher;
    Rat param = 1;  // sigma / p / lambda / rate / half-width; unused for Rademacher

    std::string name() const;
    bool symmetric() const;
    bool mean_zero() const;
    bool exact_moments() const { return true; }
    bool exact_cumulants() const { return true; }
    /// False for the Gaussian, whose odd absolute moments involve sqrt(2/pi).
    bool exact_abs_moments() const;
    /// E|X|^n = 1 for all n (the worst case for moment-only bounds);
    /// Rademacher is the unique symmetric such member of the registry.
    bool unit_absolute_moments() const;
};

ReferenceLaw rademacher();
ReferenceLaw gaussian(const Rat& sigma);
ReferenceLaw bernoulli(const Rat& p);
ReferenceLaw poisson(const Rat& lambda);
ReferenceLaw exponential(const Rat& rate);
ReferenceLaw uniform_symmetric(const Rat& half_width);

/// Parses "rademacher", "gaussian:sigma=1", "bernoulli:p=1/2",
/// "poisson:lambda=1", "exponential:rate=1", "uniform:a=1".
/// Throws std::invalid_argument listing the registry on failure.
ReferenceLaw parse_law(std::string_view spec);
std::vector<std::string> law_registry();

Rat law_moment(const ReferenceLaw& law, int n);
Value law_abs_moment(const ReferenceLaw& law, int n);
Rat law_cumulant(const ReferenceLaw& law, int n);

/// Moments, absolute moments and flags assembled up to n_max.
MomentSequence law_moment_sequence(const ReferenceLaw& law, int n_max);

/// Full forward + converse verification for one law; unit-moment laws also
/// carry the efficiency-gap record.
struct LawVerification {
    std::vector<BoundReport> bounds;
    std::vector<ConverseReport> converse;
    std::optional<EfficiencyGap> gap;
    bool all_ok = false;
};

LawVerification verify_law(const ReferenceLaw& law, int n_max);

/// i.i.d. samples drawn from a seeded mt19937_64; the stream is a pure
/// function of (law, count, seed).
std::vector<double> sample(const ReferenceLaw& law, std::size_t count, std::uint64_t seed);

/// Plug-in moment estimates (1/N) sum x_i^k for k = 1..n_max.
std::vector<double> empirical_moments(std::span<const double> samples, int n_max);

}  // namespace cumbound
