#include "cumbound/combinatorics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cumbound {

std::string_view partition_class_name(PartitionClass cls) {
    switch (cls) {
        case PartitionClass::All: return "all";
        case PartitionClass::NoSingletons: return "no-singletons";
        case PartitionClass::EvenBlocks: return "even-blocks";
    }
    return "?";
}

int SetPartition::ground_set_size() const {
    int total = 0;
    for (const auto& block : blocks) total += static_cast<int>(block.size());
    return total;
}

namespace {

// Triangular memo table keyed by (n, k), grown on demand and immutable
// afterwards. Construction is single-writer; reads are lock-free.
class CountTriangle {
public:
    explicit CountTriangle(PartitionClass cls) : cls_(cls) {
        rows_.push_back({Int(1)});  // T(0, 0) = 1
    }

    const Int& get(int n, int k) {
        ensure(n);
        static const Int zero = 0;
        if (k < 0 || k > n) return zero;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    void ensure(int n) {
        while (static_cast<int>(rows_.size()) <= n) {
            const int m = static_cast<int>(rows_.size());
            std::vector<Int> row(static_cast<std::size_t>(m) + 1, Int(0));
            for (int k = 1; k <= m; ++k) {
                Int total = 0;
                for (int j = 1; j <= m; ++j) {
                    if (cls_ == PartitionClass::NoSingletons && j < 2) continue;
                    if (cls_ == PartitionClass::EvenBlocks && (j < 2 || j % 2 != 0)) continue;
                    if (m - j < k - 1) break;
                    total += binomial(m - 1, j - 1) *
                             rows_[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(k - 1)];
                }
                row[static_cast<std::size_t>(k)] = std::move(total);
            }
            rows_.push_back(std::move(row));
        }
    }

    PartitionClass cls_;
    std::vector<std::vector<Int>> rows_;
};

CountTriangle& triangle_for(PartitionClass cls) {
    static CountTriangle all(PartitionClass::All);
    static CountTriangle no_singletons(PartitionClass::NoSingletons);
    static CountTriangle even_blocks(PartitionClass::EvenBlocks);
    switch (cls) {
        case PartitionClass::NoSingletons: return no_singletons;
        case PartitionClass::EvenBlocks: return even_blocks;
        case PartitionClass::All: break;
    }
    return all;
}

}  // namespace

Int stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > n) return 0;
    // Classical recurrence S(n,k) = S(n-1,k-1) + k S(n-1,k); kept separate
    // from the convolution DP so the two act as independent paths.
    static std::vector<std::vector<Int>> rows{{Int(1)}};
    while (static_cast<int>(rows.size()) <= n) {
        const int m = static_cast<int>(rows.size());
        std::vector<Int> row(static_cast<std::size_t>(m) + 1, Int(0));
        for (int j = 1; j <= m; ++j) {
            row[static_cast<std::size_t>(j)] =
                rows[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)] +
                Int(j) * (j <= m - 1
                              ? rows[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)]
                              : Int(0));
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int ordered_bell(int m) {
    if (m < 0) throw std::invalid_argument("ordered_bell: negative argument");
    Int total = 0;
    for (int k = 0; k <= m; ++k) total += stirling2(m, k) * factorial(k);
    return total;
}

Int bell_ordinary(int n) {
    if (n < 0) throw std::invalid_argument("bell_ordinary: negative argument");
    Int total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

Int no_singleton_bell(int n) {
    if (n < 0) throw std::invalid_argument("no_singleton_bell: negative argument");
    Int total = 0;
    for (int k = 0; k <= n; ++k) total += count_restricted(PartitionClass::NoSingletons, n, k);
    return total;
}

Int count_restricted(PartitionClass cls, int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("count_restricted: negative argument");
    if (k > n) return 0;
    return triangle_for(cls).get(n, k);
}

Int no_singleton_count_two_term(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("no_singleton_count_two_term: negative argument");
    static std::vector<std::vector<Int>> rows{{Int(1)}};
    while (static_cast<int>(rows.size()) <= n) {
        const int m = static_cast<int>(rows.size());
        std::vector<Int> row(static_cast<std::size_t>(m) + 1, Int(0));
        for (int j = 1; j <= m; ++j) {
            Int value = Int(j) * (j < m ? rows[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)]
                                        : Int(0));
            if (m >= 2 && j - 1 <= m - 2) {
                value += Int(m - 1) *
                         rows[static_cast<std::size_t>(m - 2)][static_cast<std::size_t>(j - 1)];
            }
            row[static_cast<std::size_t>(j)] = std::move(value);
        }
        rows.push_back(std::move(row));
    }
    if (k > n) return 0;
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int coefficient_mass(PartitionClass cls, int n) {
    if (n < 1) throw std::invalid_argument("coefficient_mass: order must be >= 1");
    Int total = 0;
    for (int k = 1; k <= n; ++k) {
        const Int count = count_restricted(cls, n, k);
        if (count != 0) total += count * factorial(k - 1);
    }
    return total;
}

const Int& CoefficientTable::at(int n) const {
    if (n < 1 || n > max_order) throw std::out_of_range("CoefficientTable: order out of range");
    return values[static_cast<std::size_t>(n)];
}

CoefficientTable coefficient_table(PartitionClass cls, int max_order) {
    if (max_order < 1) throw std::invalid_argument("coefficient_table: max_order must be >= 1");
    CoefficientTable table;
    table.cls = cls;
    table.max_order = max_order;
    table.provenance = Provenance::Recurrence;
    table.values.resize(static_cast<std::size_t>(max_order) + 1);
    for (int n = 1; n <= max_order; ++n) {
        table.values[static_cast<std::size_t>(n)] = coefficient_mass(cls, n);
    }
    return table;
}

CoefficientTable coefficient_table_brute_force(PartitionClass cls, int max_order, int limit) {
    if (max_order < 1) throw std::invalid_argument("coefficient_table: max_order must be >= 1");
    CoefficientTable table;
    table.cls = cls;
    table.max_order = max_order;
    table.provenance = Provenance::BruteForce;
    table.values.resize(static_cast<std::size_t>(max_order) + 1);
    for (int n = 1; n <= max_order; ++n) {
        Int mass = 0;
        for_each_partition(
            n, cls,
            [&mass](const SetPartition& partition) {
                mass += factorial(partition.block_count() - 1);
                return true;
            },
            limit);
        table.values[static_cast<std::size_t>(n)] = std::move(mass);
    }
    return table;
}

namespace {

bool admissible(const SetPartition& partition, PartitionClass cls) {
    switch (cls) {
        case PartitionClass::All:
            return true;
        case PartitionClass::NoSingletons:
            for (const auto& block : partition.blocks) {
                if (block.size() < 2) return false;
            }
            return true;
        case PartitionClass::EvenBlocks:
            for (const auto& block : partition.blocks) {
                if (block.size() % 2 != 0) return false;
            }
            return true;
    }
    return false;
}

// Depth-first over elements: element i joins an existing block or opens a
// new one. Blocks stay sorted by their minimum, so each partition appears
// exactly once. Returns false when the visitor stopped the walk.
bool walk(int element, int n, PartitionClass cls, SetPartition& buffer,
          const std::function<bool(const SetPartition&)>& visit) {
    if (element > n) {
        if (!admissible(buffer, cls)) return true;
        return visit(buffer);
    }
    for (auto& block : buffer.blocks) {
        block.push_back(element);
        const bool keep_going = walk(element + 1, n, cls, buffer, visit);
        block.pop_back();
        if (!keep_going) return false;
    }
    buffer.blocks.push_back({element});
    const bool keep_going = walk(element + 1, n, cls, buffer, visit);
    buffer.blocks.pop_back();
    return keep_going;
}

}  // namespace

void for_each_partition(int n, PartitionClass cls,
                        const std::function<bool(const SetPartition&)>& visit, int limit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: negative ground set");
    if (n > limit) {
        throw std::length_error("partition enumeration capped at n = " + std::to_string(limit) +
                                " (requested n = " + std::to_string(n) + ")");
    }
    SetPartition buffer;
    if (n == 0) {
        if (admissible(buffer, cls)) visit(buffer);
        return;
    }
    buffer.blocks.reserve(static_cast<std::size_t>(n));
    walk(1, n, cls, buffer, visit);
}

std::vector<SetPartition> enumerate_partitions(int n, PartitionClass cls, int limit) {
    std::vector<SetPartition> out;
    for_each_partition(
        n, cls,
        [&out](const SetPartition& partition) {
            out.push_back(partition);
            return true;
        },
        limit);
    return out;
}

}  // namespace cumbound
