#pragma once

#include "cumbound/combinatorics.hpp"
#include "cumbound/numeric.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cumbound {

/// Raw moments m_1..m_n as exact rationals, with optional absolute moments
/// mu_1..mu_n (exact where a closed form exists, double otherwise) and the
/// structural flags the bounds hierarchy keys on.
struct MomentSequence {
    std::vector<Rat> values;      // m_1..m_n
    std::vector<Value> abs_values;  // mu_1..mu_n; empty when unavailable
    bool mean_known_zero = false;
    bool symmetric = false;

    int order() const { return static_cast<int>(values.size()); }
    bool has_abs_values() const { return !abs_values.empty(); }
    const Rat& moment(int n) const;       // 1-based
    const Value& abs_moment(int n) const;  // 1-based
    std::vector<double> values_as_double() const;

    MomentSequence truncated(int n_max) const;
};

/// Checks the declared invariants: |m_k| <= mu_k where both sides are
/// present, Lyapunov log-convexity of the absolute moments (float check,
/// relative tolerance 1e-12), zero odd moments under the symmetric flag and
/// m_1 = 0 under mean_known_zero. Throws std::invalid_argument on violation.
void validate(const MomentSequence& m);

struct CumulantSequence {
    std::vector<Rat> values;  // kappa_1..kappa_n

    int order() const { return static_cast<int>(values.size()); }
    const Rat& cumulant(int n) const;  // 1-based
    CumulantSequence truncated(int n_max) const;
};

/// kappa_1..kappa_n from m_1..m_n via the triangular recurrence
///   kappa_n = m_n - sum_{k=1}^{n-1} C(n-1, k-1) kappa_k m_{n-k},
/// an exact closed form equivalent to the alternating partition sum.
CumulantSequence moments_to_cumulants(const MomentSequence& m);

/// Inverse direction: m_n = sum_{k=1}^{n} C(n-1, k-1) kappa_k m_{n-k}, m_0 = 1.
MomentSequence cumulants_to_moments(const CumulantSequence& k);

/// Central raw moments E[(X - m_1)^k] via the exact binomial shift.
/// The result has mean_known_zero set and first entry exactly 0.
MomentSequence center_moments(const MomentSequence& m);

/// Exact shift: moments of X + c from moments of X (binomial transform).
MomentSequence shift_moments(const MomentSequence& m, const Rat& c);

/// Multi-index nu = (nu_1..nu_d) of total order N = sum nu_j.
struct MultiIndex {
    std::vector<int> nu;

    int dimension() const { return static_cast<int>(nu.size()); }
    int total_order() const;

    /// Enforces d >= 1, every entry >= 0 and N >= 1.
    void check() const;
};

/// Mixed moments E[prod_j X_j^{e_j}] for all exponent vectors with total
/// degree <= max_total_degree, plus per-component absolute moments
/// E|X_j|^r used by the Hoelder checks. All entries exact rationals.
struct MixedMomentTable {
    int dimension = 0;
    int max_total_degree = 0;
    std::map<std::vector<int>, Rat> moments;
    std::map<std::pair<int, int>, Rat> abs_moments;  // (component, order)

    const Rat& moment(const std::vector<int>& exponents) const;
    const Rat& abs_moment(int component, int order) const;
};

/// Joint cumulant kappa_nu via the alternating partition sum over N labeled
/// slots under the canonical slot-to-variable map (slots ordered by variable
/// index). Exact rational; throws above the enumeration limit or on a
/// missing mixed-moment entry.
Rat joint_cumulant(const MixedMomentTable& moments, const MultiIndex& nu,
                   int limit = kEnumerationLimit);

/// A finitely supported law on rational points of R^d; the generic source of
/// MixedMomentTable instances.
struct DiscreteVectorLaw {
    std::vector<std::vector<Rat>> atoms;  // atoms[i] is a point in R^d
    std::vector<Rat> probabilities;       // same length, sums to 1

    int dimension() const;
    void check() const;
    MixedMomentTable mixed_moments(int max_total_degree) const;
};

}  // namespace cumbound
