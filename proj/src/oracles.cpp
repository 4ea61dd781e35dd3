#include "qgrowth/oracles.hpp"

#include <array>
#include <deque>
#include <numeric>
#include <string>

#include "qgrowth/errors.hpp"

namespace qgrowth {

namespace {

void enumerate(std::int64_t remaining, std::int64_t max_part, std::int64_t parts, PartitionFilter filter,
               Integer& count)
{
    if (remaining == 0) {
        if (filter == PartitionFilter::all || parts % 2 == 0)
            ++count;
        return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part)
        enumerate(remaining - part, part, parts + 1, filter, count);
}

constexpr int max_degree = 9;
using Perm = std::array<std::uint8_t, max_degree>;

std::size_t factorial(int n)
{
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::size_t>(i);
    return f;
}

// Lehmer-code rank in [0, m!).
std::size_t rank(const Perm& p, int m)
{
    std::size_t r = 0;
    for (int i = 0; i < m; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < m; ++j)
            if (p[j] < p[i])
                ++smaller;
        r = r * static_cast<std::size_t>(m - i) + static_cast<std::size_t>(smaller);
    }
    return r;
}

// (g * s)(x) = g(s(x))
Perm compose(const Perm& g, const Perm& s, int m)
{
    Perm out{};
    for (int x = 0; x < m; ++x)
        out[x] = g[s[x]];
    return out;
}

Perm inverse(const Perm& g, int m)
{
    Perm out{};
    for (int x = 0; x < m; ++x)
        out[g[x]] = static_cast<std::uint8_t>(x);
    return out;
}

Perm identity(int m)
{
    Perm p{};
    for (int x = 0; x < m; ++x)
        p[x] = static_cast<std::uint8_t>(x);
    return p;
}

Perm cycle(int m, std::initializer_list<int> points)
{
    Perm p = identity(m);
    std::vector<int> pts(points);
    for (std::size_t i = 0; i < pts.size(); ++i)
        p[pts[i]] = static_cast<std::uint8_t>(pts[(i + 1) % pts.size()]);
    return p;
}

std::vector<Perm> generator_list(const GroupSpec& g)
{
    const int m = g.degree;
    std::vector<Perm> gens;
    switch (g.generators) {
    case GeneratorSet::coxeter:
        for (int i = 0; i + 1 < m; ++i)
            gens.push_back(cycle(m, {i, i + 1}));
        break;
    case GeneratorSet::all_transpositions:
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                gens.push_back(cycle(m, {i, j}));
        break;
    case GeneratorSet::consecutive_3_cycles:
        for (int i = 0; i + 2 < m; ++i) {
            gens.push_back(cycle(m, {i, i + 1, i + 2}));
            gens.push_back(cycle(m, {i + 2, i + 1, i}));
        }
        break;
    case GeneratorSet::all_3_cycles:
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    if (i < j && i < k && j != k)
                        gens.push_back(cycle(m, {i, j, k}));
        break;
    }
    return gens;
}

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<std::size_t> parent;
};

} // namespace

Integer oracle_partition_count(std::int64_t n, PartitionFilter filter)
{
    if (n < 0)
        throw invalid_argument("partition count needs n >= 0");
    if (n > partition_enumeration_budget)
        throw budget_exceeded("partition enumeration is limited to n <= " +
                              std::to_string(partition_enumeration_budget));
    Integer count;
    enumerate(n, n, 0, filter, count);
    return count;
}

std::vector<std::int64_t> oracle_bfs_conjugacy_growth(const GroupSpec& group, std::int64_t n_max)
{
    const int m = group.degree;
    if (m < 1)
        throw invalid_argument("group degree must be >= 1");
    const bool alternating = group.flavor == GroupFlavor::alternating;
    const bool three_cycles = group.generators == GeneratorSet::consecutive_3_cycles ||
                              group.generators == GeneratorSet::all_3_cycles;
    if (alternating != three_cycles)
        throw invalid_argument(alternating ? "alternating groups take 3-cycle generators"
                                           : "symmetric groups take transposition generators");
    const int budget = alternating ? alternating_degree_budget : symmetric_degree_budget;
    if (m > budget)
        throw budget_exceeded("BFS oracle degree " + std::to_string(m) + " exceeds the budget " +
                              std::to_string(budget));
    if (n_max < 0)
        throw invalid_argument("n_max must be >= 0");

    const std::vector<Perm> gens = generator_list(group);
    const std::size_t total = factorial(m);
    std::vector<std::int32_t> dist(total, -1);
    std::vector<Perm> elements;
    std::vector<std::size_t> ranks;

    const Perm id = identity(m);
    dist[rank(id, m)] = 0;
    std::deque<Perm> queue{id};
    while (!queue.empty()) {
        const Perm g = queue.front();
        queue.pop_front();
        const std::size_t rg = rank(g, m);
        elements.push_back(g);
        ranks.push_back(rg);
        for (const Perm& s : gens) {
            const Perm h = compose(g, s, m);
            const std::size_t rh = rank(h, m);
            if (dist[rh] < 0) {
                dist[rh] = dist[rg] + 1;
                queue.push_back(h);
            }
        }
    }

    // Conjugation orbits under the generators are the conjugacy classes.
    DisjointSets classes(total);
    for (const Perm& g : elements) {
        const std::size_t rg = rank(g, m);
        for (const Perm& s : gens) {
            const Perm c = compose(compose(s, g, m), inverse(s, m), m);
            classes.unite(rg, rank(c, m));
        }
    }
    std::vector<std::int32_t> kappa(total, -1);
    for (std::size_t r : ranks) {
        const std::size_t root = classes.find(r);
        if (kappa[root] < 0 || dist[r] < kappa[root])
            kappa[root] = dist[r];
    }
    std::vector<std::int64_t> gamma(static_cast<std::size_t>(n_max + 1), 0);
    for (std::size_t r : ranks)
        if (classes.find(r) == r && kappa[r] <= n_max)
            ++gamma[static_cast<std::size_t>(kappa[r])];
    return gamma;
}

} // namespace qgrowth
