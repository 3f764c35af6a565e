#include "cumbound/transforms.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cumbound {

const Rat& MomentSequence::moment(int n) const {
    if (n < 1 || n > order()) throw std::out_of_range("MomentSequence: order out of range");
    return values[static_cast<std::size_t>(n - 1)];
}

const Value& MomentSequence::abs_moment(int n) const {
    if (n < 1 || n > static_cast<int>(abs_values.size())) {
        throw std::out_of_range("MomentSequence: absolute moment missing at order " +
                                std::to_string(n));
    }
    return abs_values[static_cast<std::size_t>(n - 1)];
}

std::vector<double> MomentSequence::values_as_double() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_double(v));
    return out;
}

MomentSequence MomentSequence::truncated(int n_max) const {
    if (n_max < 1 || n_max > order()) throw std::out_of_range("truncated: bad order");
    MomentSequence out = *this;
    out.values.resize(static_cast<std::size_t>(n_max));
    if (!out.abs_values.empty()) {
        out.abs_values.resize(
            std::min(out.abs_values.size(), static_cast<std::size_t>(n_max)));
    }
    return out;
}

void validate(const MomentSequence& m) {
    if (m.mean_known_zero && m.order() >= 1 && m.values[0] != 0) {
        throw std::invalid_argument("mean_known_zero is set but m_1 != 0");
    }
    if (m.symmetric) {
        for (int n = 1; n <= m.order(); n += 2) {
            if (m.moment(n) != 0) {
                throw std::invalid_argument("symmetric flag is set but m_" + std::to_string(n) +
                                            " != 0");
            }
        }
    }
    const int abs_order = static_cast<int>(m.abs_values.size());
    for (int n = 1; n <= std::min(abs_order, m.order()); ++n) {
        const Value& mu = m.abs_values[static_cast<std::size_t>(n - 1)];
        if (is_exact(mu)) {
            if (boost::multiprecision::abs(m.moment(n)) > std::get<Rat>(mu)) {
                throw std::invalid_argument("|m_" + std::to_string(n) +
                                            "| exceeds the absolute moment");
            }
        } else {
            const double lhs = std::abs(to_double(m.moment(n)));
            const double rhs = std::get<double>(mu);
            if (lhs > rhs * (1.0 + 1e-12) + 1e-300) {
                throw std::invalid_argument("|m_" + std::to_string(n) +
                                            "| exceeds the absolute moment");
            }
        }
    }
    // Lyapunov log-convexity: mu_j^(1/j) nondecreasing in j.
    double prev_root = 0.0;
    for (int n = 1; n <= abs_order; ++n) {
        const double mu = to_double(m.abs_values[static_cast<std::size_t>(n - 1)]);
        if (mu < 0) throw std::invalid_argument("negative absolute moment");
        const double root = std::pow(mu, 1.0 / n);
        if (root < prev_root * (1.0 - 1e-12)) {
            throw std::invalid_argument("absolute moments violate Lyapunov monotonicity at order " +
                                        std::to_string(n));
        }
        prev_root = std::max(prev_root, root);
    }
}

const Rat& CumulantSequence::cumulant(int n) const {
    if (n < 1 || n > order()) throw std::out_of_range("CumulantSequence: order out of range");
    return values[static_cast<std::size_t>(n - 1)];
}

CumulantSequence CumulantSequence::truncated(int n_max) const {
    if (n_max < 1 || n_max > order()) throw std::out_of_range("truncated: bad order");
    CumulantSequence out = *this;
    out.values.resize(static_cast<std::size_t>(n_max));
    return out;
}

CumulantSequence moments_to_cumulants(const MomentSequence& m) {
    const int n_max = m.order();
    if (n_max == 0) throw std::invalid_argument("moments_to_cumulants: empty input");
    CumulantSequence out;
    out.values.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        Rat kappa = m.moment(n);
        for (int k = 1; k <= n - 1; ++k) {
            kappa -= Rat(binomial(n - 1, k - 1)) * out.values[static_cast<std::size_t>(k - 1)] *
                     m.moment(n - k);
        }
        out.values.push_back(std::move(kappa));
    }
    return out;
}

MomentSequence cumulants_to_moments(const CumulantSequence& k) {
    const int n_max = k.order();
    if (n_max == 0) throw std::invalid_argument("cumulants_to_moments: empty input");
    std::vector<Rat> with_zero{Rat(1)};  // m_0 = 1
    for (int n = 1; n <= n_max; ++n) {
        Rat m_n = 0;
        for (int j = 1; j <= n; ++j) {
            m_n += Rat(binomial(n - 1, j - 1)) * k.cumulant(j) *
                   with_zero[static_cast<std::size_t>(n - j)];
        }
        with_zero.push_back(std::move(m_n));
    }
    MomentSequence out;
    out.values.assign(with_zero.begin() + 1, with_zero.end());
    out.mean_known_zero = k.cumulant(1) == 0;
    return out;
}

MomentSequence shift_moments(const MomentSequence& m, const Rat& c) {
    const int n_max = m.order();
    MomentSequence out;
    out.values.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        Rat shifted = 0;
        Rat c_power = 1;  // c^(n-j) built from the top
        for (int j = n; j >= 0; --j) {
            const Rat m_j = j == 0 ? Rat(1) : m.moment(j);
            shifted += Rat(binomial(n, j)) * m_j * c_power;
            c_power *= c;
        }
        out.values.push_back(std::move(shifted));
    }
    return out;
}

MomentSequence center_moments(const MomentSequence& m) {
    if (m.order() < 1) throw std::invalid_argument("center_moments: m_1 required");
    MomentSequence out = shift_moments(m, -m.moment(1));
    out.mean_known_zero = true;
    out.symmetric = m.symmetric;
    out.abs_values.clear();  // absolute moments do not survive a shift
    return out;
}

int MultiIndex::total_order() const {
    return std::accumulate(nu.begin(), nu.end(), 0);
}

void MultiIndex::check() const {
    if (nu.empty()) throw std::invalid_argument("multi-index must have dimension >= 1");
    for (int entry : nu) {
        if (entry < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
    }
    if (total_order() < 1) throw std::invalid_argument("multi-index total order must be >= 1");
}

const Rat& MixedMomentTable::moment(const std::vector<int>& exponents) const {
    auto it = moments.find(exponents);
    if (it == moments.end()) {
        std::ostringstream oss;
        oss << "missing mixed moment entry (";
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (i) oss << ",";
            oss << exponents[i];
        }
        oss << ")";
        throw std::out_of_range(oss.str());
    }
    return it->second;
}

const Rat& MixedMomentTable::abs_moment(int component, int order) const {
    auto it = abs_moments.find({component, order});
    if (it == abs_moments.end()) {
        throw std::out_of_range("missing absolute moment for component " +
                                std::to_string(component) + " order " + std::to_string(order));
    }
    return it->second;
}

Rat joint_cumulant(const MixedMomentTable& moments, const MultiIndex& nu, int limit) {
    nu.check();
    const int total = nu.total_order();
    if (nu.dimension() != moments.dimension) {
        throw std::invalid_argument("joint_cumulant: multi-index dimension " +
                                    std::to_string(nu.dimension()) + " does not match the table");
    }
    if (total > moments.max_total_degree) {
        throw std::invalid_argument("joint_cumulant: table not populated to total degree " +
                                    std::to_string(total));
    }

    // Canonical slot-to-variable map: slots 1..nu_1 belong to variable 0, etc.
    std::vector<int> slot_variable(static_cast<std::size_t>(total));
    {
        int slot = 0;
        for (int j = 0; j < nu.dimension(); ++j) {
            for (int r = 0; r < nu.nu[static_cast<std::size_t>(j)]; ++r) {
                slot_variable[static_cast<std::size_t>(slot++)] = j;
            }
        }
    }

    Rat sum = 0;
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
                product *= moments.moment(exponents);
                if (product == 0) break;
            }
            if (product != 0) {
                const int blocks = partition.block_count();
                const Rat weight = Rat(factorial(blocks - 1));
                if (blocks % 2 == 1) {
                    sum += weight * product;
                } else {
                    sum -= weight * product;
                }
            }
            return true;
        },
        limit);
    return sum;
}

int DiscreteVectorLaw::dimension() const {
    return atoms.empty() ? 0 : static_cast<int>(atoms.front().size());
}

void DiscreteVectorLaw::check() const {
    if (atoms.empty()) throw std::invalid_argument("DiscreteVectorLaw: no atoms");
    if (atoms.size() != probabilities.size()) {
        throw std::invalid_argument("DiscreteVectorLaw: atom/probability length mismatch");
    }
    const std::size_t d = atoms.front().size();
    if (d == 0) throw std::invalid_argument("DiscreteVectorLaw: zero-dimensional atoms");
    Rat total = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].size() != d) throw std::invalid_argument("DiscreteVectorLaw: ragged atoms");
        if (probabilities[i] < 0) throw std::invalid_argument("DiscreteVectorLaw: negative probability");
        total += probabilities[i];
    }
    if (total != 1) throw std::invalid_argument("DiscreteVectorLaw: probabilities must sum to 1");
}

namespace {

void fill_exponents(const DiscreteVectorLaw& law, int remaining, std::size_t component,
                    std::vector<int>& exponents, MixedMomentTable& table) {
    if (component + 1 == exponents.size()) {
        for (int e = 0; e <= remaining; ++e) {
            exponents[component] = e;
            Rat expectation = 0;
            for (std::size_t i = 0; i < law.atoms.size(); ++i) {
                Rat term = law.probabilities[i];
                for (std::size_t j = 0; j < exponents.size(); ++j) {
                    for (int r = 0; r < exponents[j]; ++r) term *= law.atoms[i][j];
                }
                expectation += term;
            }
            table.moments.emplace(exponents, std::move(expectation));
        }
        exponents[component] = 0;
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        exponents[component] = e;
        fill_exponents(law, remaining - e, component + 1, exponents, table);
    }
    exponents[component] = 0;
}

}  // namespace

MixedMomentTable DiscreteVectorLaw::mixed_moments(int max_total_degree) const {
    check();
    if (max_total_degree < 1) {
        throw std::invalid_argument("mixed_moments: max_total_degree must be >= 1");
    }
    MixedMomentTable table;
    table.dimension = dimension();
    table.max_total_degree = max_total_degree;
    std::vector<int> exponents(static_cast<std::size_t>(table.dimension), 0);
    fill_exponents(*this, max_total_degree, 0, exponents, table);
    for (int j = 0; j < table.dimension; ++j) {
        for (int r = 1; r <= max_total_degree; ++r) {
            Rat expectation = 0;
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                Rat term = probabilities[i];
                const Rat magnitude = boost::multiprecision::abs(atoms[i][static_cast<std::size_t>(j)]);
                for (int q = 0; q < r; ++q) term *= magnitude;
                expectation += term;
            }
            table.abs_moments.emplace(std::make_pair(j, r), std::move(expectation));
        }
    }
    return table;
}

}  // namespace cumbound
