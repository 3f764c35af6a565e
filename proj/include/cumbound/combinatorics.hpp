#pragma once

#include "cumbound/numeric.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace cumbound {

/// Selects the admissible set-partition family and hence the coefficient
/// family: All blocks (raw bound), blocks of size >= 2 (centered bound),
/// blocks of even size (symmetric bound).
enum class PartitionClass { All, NoSingletons, EvenBlocks };

std::string_view partition_class_name(PartitionClass cls);

enum class Provenance { Recurrence, EgfSeries, BruteForce };

/// A partition of {1..n} into disjoint nonempty blocks.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int ground_set_size() const;
};

/// Default cap for explicit partition enumeration. Bell(12) is ~4.2e6;
/// beyond that enumeration is a programming error, not a slow path.
inline constexpr int kEnumerationLimit = 12;

/// Stirling number of the second kind S(n, k). Out-of-range arguments
/// (k > n, or k == 0 with n > 0) return 0.
Int stirling2(int n, int k);

/// Ordered Bell (Fubini) number: sum_k S(m, k) k!, with ordered_bell(0) = 1.
Int ordered_bell(int m);

/// Ordinary Bell number B_n = sum_k S(n, k).
Int bell_ordinary(int n);

/// Number of partitions of [n] with no singleton block.
Int no_singleton_bell(int n);

/// Number of partitions of [n] into k blocks that are admissible for `cls`.
/// Computed by the block-of-element-n convolution
///   T(n, k) = sum over admissible j of C(n-1, j-1) T(n-j, k-1),
/// where admissible j is j >= 1 (All), j >= 2 (NoSingletons),
/// even j >= 2 (EvenBlocks). T(0, 0) = 1.
Int count_restricted(PartitionClass cls, int n, int k);

/// Independent two-term recurrence for the NoSingletons counts,
///   T(n, k) = k T(n-1, k) + (n-1) T(n-2, k-1),
/// used as a cross-check path against count_restricted.
Int no_singleton_count_two_term(int n, int k);

/// Total coefficient mass sum_k count_restricted(cls, n, k) (k-1)! for n >= 1.
/// This is the bound coefficient: C_raw, C_cen or C_sym depending on `cls`.
Int coefficient_mass(PartitionClass cls, int n);

/// Coefficient family values for n = 1..max_order with recorded provenance.
struct CoefficientTable {
    PartitionClass cls;
    int max_order = 0;
    Provenance provenance = Provenance::Recurrence;
    std::vector<Int> values;  // index 0 unused; values[n] for 1 <= n <= max_order

    const Int& at(int n) const;
};

CoefficientTable coefficient_table(PartitionClass cls, int max_order);

/// Same table built by summing (#blocks - 1)! over explicit enumeration;
/// cross-check provenance, subject to the enumeration cap.
CoefficientTable coefficient_table_brute_force(PartitionClass cls, int max_order,
                                               int limit = kEnumerationLimit);

/// Visits every admissible partition of {1..n} exactly once. The visitor
/// receives a reusable buffer valid only for the duration of the call and
/// returns false to stop early. Throws std::length_error above `limit`.
///
/// Concurrency: enumeration owns its private state and is safe to run from
/// several threads at once; the shared count/mass tables above are built
/// single-writer and are safe for concurrent reads once warm.
void for_each_partition(int n, PartitionClass cls,
                        const std::function<bool(const SetPartition&)>& visit,
                        int limit = kEnumerationLimit);

std::vector<SetPartition> enumerate_partitions(int n, PartitionClass cls,
                                               int limit = kEnumerationLimit);

}  // namespace cumbound
