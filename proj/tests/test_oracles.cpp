#include <doctest.h>

#include "qgrowth/errors.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/oracles.hpp"

using namespace qgrowth;

TEST_CASE("partition enumeration")
{
    CHECK(oracle_partition_count(0, PartitionFilter::all) == 1);
    CHECK(oracle_partition_count(5, PartitionFilter::all) == 7);
    // 5 = 4+1 = 3+2 = 2+1+1+1 = 1+1+1+1+1 ... even counts: (4,1), (3,2), (2,1,1,1)
    CHECK(oracle_partition_count(5, PartitionFilter::even_part_count) == 3);
    CHECK_THROWS_AS(oracle_partition_count(61, PartitionFilter::all), budget_exceeded);
}

TEST_CASE("symmetric groups with all transpositions count partitions in the stable range")
{
    const QSeries p = partition_series(10);
    for (int degree = 3; degree <= 8; ++degree) {
        const auto gamma = oracle_bfs_conjugacy_growth({degree, GroupFlavor::symmetric,
                                                        GeneratorSet::all_transpositions}, 9);
        for (int n = 0; 2 * n <= degree; ++n)
            CHECK(gamma[static_cast<std::size_t>(n)] == p.coefficient_at(n));
        // Classes of Sym(d) have length d - (number of cycles) <= d - 1.
        std::int64_t total = 0;
        for (auto g : gamma)
            total += g;
        CHECK(total == p.coefficient_at(degree));
    }
}

TEST_CASE("alternating groups with all 3-cycles")
{
    const QSeries alt = alt_series(5);
    const auto a7 = oracle_bfs_conjugacy_growth({7, GroupFlavor::alternating, GeneratorSet::all_3_cycles}, 5);
    CHECK(a7[0] == 1);
    CHECK(a7[1] == alt.coefficient_at(1));
    CHECK(a7[2] == alt.coefficient_at(2));
    // Alt(8): cycle type 5+3 splits into two classes, so n = 3 exceeds the limit by one.
    const auto a8 = oracle_bfs_conjugacy_growth({8, GroupFlavor::alternating, GeneratorSet::all_3_cycles}, 4);
    CHECK(a8[3] == alt.coefficient_at(3) + 1);
}

TEST_CASE("Coxeter generators")
{
    const auto s3 = oracle_bfs_conjugacy_growth({3, GroupFlavor::symmetric, GeneratorSet::coxeter}, 4);
    CHECK(s3 == std::vector<std::int64_t>{1, 1, 1, 0, 0});
    const auto s4 = oracle_bfs_conjugacy_growth({4, GroupFlavor::symmetric, GeneratorSet::coxeter}, 6);
    // identity, (12), (123), (12)(34) at length 2, (1234) at length 3
    CHECK(s4 == std::vector<std::int64_t>{1, 1, 2, 1, 0, 0, 0});
}

TEST_CASE("budgets")
{
    CHECK_THROWS_AS(oracle_bfs_conjugacy_growth({9, GroupFlavor::symmetric, GeneratorSet::all_transpositions}, 3),
                    budget_exceeded);
    CHECK_THROWS_AS(oracle_bfs_conjugacy_growth({10, GroupFlavor::alternating, GeneratorSet::all_3_cycles}, 3),
                    budget_exceeded);
    CHECK_THROWS_AS(oracle_bfs_conjugacy_growth({4, GroupFlavor::symmetric, GeneratorSet::all_3_cycles}, 3),
                    invalid_argument);
}
