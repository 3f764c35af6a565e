#pragma once

#include "cumbound/combinatorics.hpp"
#include "cumbound/numeric.hpp"
#include "cumbound/transforms.hpp"

#include <span>
#include <vector>

namespace cumbound {

/// Which absolute-moment functional a bound was evaluated against.
enum class MomentFunctionalKind { RawAbs, CentralAbs, SymmetricAbs };

std::string_view moment_functional_name(MomentFunctionalKind kind);

/// Result of a forward bound evaluation. For EvenBlocks at odd order the
/// statement is "kappa_n = 0 exactly"; `vanishes` distinguishes that from a
/// zero-valued bound so callers cannot misread vacuity as slack.
struct ForwardBound {
    Int coefficient;
    double value = 0.0;
    bool vanishes = false;
};

/// coefficient_mass(cls, n) * functional. Preconditions: n >= 1 for All,
/// n >= 2 for NoSingletons and EvenBlocks, functional >= 0.
ForwardBound forward_bound(PartitionClass cls, int n, double moment_functional);

struct ForwardBoundExact {
    Int coefficient;
    Rat value;
    bool vanishes = false;
};

ForwardBoundExact forward_bound_exact(PartitionClass cls, int n, const Rat& moment_functional);

/// Per-order record of one bound evaluation.
struct BoundReport {
    int order = 0;
    PartitionClass bound_class = PartitionClass::All;
    MomentFunctionalKind functional_kind = MomentFunctionalKind::RawAbs;
    double cumulant_abs = 0.0;
    Int coefficient;
    double moment_functional = 0.0;
    double bound_value = 0.0;
    double slack_ratio = 0.0;  // cumulant_abs / bound_value, in [0, 1]
    bool strict = false;       // slack_ratio < 1 (exact verdict where decidable)
    bool equality = false;     // bound attained (the n = 2 variance identity)
    bool vanishes = false;     // symmetric class at odd order: kappa_n = 0
    bool exact = false;        // verdict decided in exact rational arithmetic
};

/// Evaluates, for each n <= n_max, the tightest applicable bound given the
/// sequence flags (symmetric > centered > raw) plus all applicable looser
/// ones. Requires absolute moments up to n_max. The centered functional is
/// the raw absolute moment when the mean is zero and the exact binomial
/// central moment at even orders otherwise; odd-order centered bounds for
/// uncentered input are not determined by raw moments and are skipped.
std::vector<BoundReport> bound_report(const MomentSequence& m, int n_max);

/// Cumulant envelope K_n = max_{1<=j<=n} |kappa_j|^(n/j).
struct CumulantEnvelope {
    int order = 0;
    double value = 0.0;
};

CumulantEnvelope envelope(const CumulantSequence& k);

/// Converse (lower) bound check at one order: |m_n| <= B_n K_n and
/// |m_n^(c)| <= B_n^(0) K_n.
struct ConverseReport {
    int order = 0;
    double raw_moment_abs = 0.0;
    double central_moment_abs = 0.0;
    double envelope_value = 0.0;
    Int bell_count;
    Int no_singleton_count;
    double raw_limit = 0.0;
    double central_limit = 0.0;
    double raw_slack = 0.0;
    double central_slack = 0.0;
    bool raw_ok = false;
    bool central_ok = false;
};

ConverseReport converse_check(const CumulantSequence& k, const MomentSequence& m);

/// converse_check at every order n = 1..n_max.
std::vector<ConverseReport> converse_sweep(const MomentSequence& m, int n_max);

/// Multivariate bound: coefficient_mass(cls, N) times the
/// product of per-component functionals raised to nu_j / N.
ForwardBound multivariate_bound(const MultiIndex& nu, std::span<const double> functionals,
                                PartitionClass cls);

/// Verifies the blockwise product-collapse inequality for every partition of
/// the N slots:  prod_B |E[prod_j X_j^{n_{j,B}}]| <= prod_j (E|X_j|^N)^(nu_j/N).
/// Returns true iff every partition satisfies it (test oracle for the
/// blockwise Hoelder product inequality).
bool holder_block_check(const MixedMomentTable& mixed, const MultiIndex& nu,
                        int limit = kEnumerationLimit);

}  // namespace cumbound
