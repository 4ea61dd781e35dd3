#ifndef QGROWTH_ORACLES_HPP
#define QGROWTH_ORACLES_HPP

// Brute-force oracles that check the growth series independently of any
// series arithmetic. Budgets are hard limits.

#include <cstdint>
#include <vector>

#include "qgrowth/integer.hpp"

namespace qgrowth {

enum class PartitionFilter { all, even_part_count };

inline constexpr std::int64_t partition_enumeration_budget = 60;

/// Counts partitions of n by listing every one of them (n <= 60).
Integer oracle_partition_count(std::int64_t n, PartitionFilter filter);

enum class GroupFlavor { symmetric, alternating };
enum class GeneratorSet { coxeter, all_transpositions, consecutive_3_cycles, all_3_cycles };

struct GroupSpec {
    int degree = 1;
    GroupFlavor flavor = GroupFlavor::symmetric;
    GeneratorSet generators = GeneratorSet::all_transpositions;
};

inline constexpr int symmetric_degree_budget = 8;
inline constexpr int alternating_degree_budget = 9;

/// Conjugacy growth gamma(0..n_max) of the finite group by breadth-first
/// search of its Cayley graph: word lengths from the identity, conjugacy
/// classes as orbits under conjugation by the generators, kappa of a class
/// as the minimum length over it.
std::vector<std::int64_t> oracle_bfs_conjugacy_growth(const GroupSpec& group, std::int64_t n_max);

} // namespace qgrowth

#endif
