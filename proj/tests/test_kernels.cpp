#include <doctest.h>

#include <random>

#include "qgrowth/kernels.hpp"
#include "support.hpp"

using namespace qgrowth;
namespace k = qgrowth::kernels;

namespace {

std::vector<k::residue> random_residues(std::mt19937_64& rng, std::size_t len, k::residue m, double sparsity)
{
    std::uniform_int_distribution<k::residue> value(0, m - 1);
    std::bernoulli_distribution drop(sparsity);
    std::vector<k::residue> out(len);
    for (auto& x : out)
        x = drop(rng) ? 0 : value(rng);
    return out;
}

// Reference computed with exact integers and reduced at the end.
std::vector<k::residue> exact_then_reduce(const std::vector<k::residue>& a, const std::vector<k::residue>& b,
                                          k::residue m, std::size_t out_len)
{
    std::vector<Integer> A(a.begin(), a.end()), B(b.begin(), b.end());
    std::vector<k::residue> out;
    for (const auto& c : test::naive_product(A, B, out_len))
        out.push_back(static_cast<k::residue>(mod_floor(c, Integer(m)).get_ui()));
    return out;
}

} // namespace

TEST_CASE("residue convolution matches exact arithmetic for small and huge moduli")
{
    std::mt19937_64 rng(11);
    const k::residue moduli[] = {2, 7, 49, 65521, 4294967291u};
    for (k::residue m : moduli) {
        for (std::size_t len : {1u, 5u, 300u, 700u}) {
            for (double sparsity : {0.0, 0.9}) {
                const auto a = random_residues(rng, len, m, sparsity);
                const auto b = random_residues(rng, len + 3, m, sparsity);
                const auto expected = exact_then_reduce(a, b, m, len + 1);
                CHECK(k::convolve_mod(a, b, m, len + 1) == expected);
                CHECK(k::serial::convolve_mod(a, b, m, len + 1) == expected);
                CHECK(k::square_mod(a, m, len) == exact_then_reduce(a, a, m, len));
            }
        }
    }
}

TEST_CASE("parallel kernels agree with serial twins for any thread count")
{
    std::mt19937_64 rng(12);
    const auto a = random_residues(rng, 2000, 343, 0.3);
    const auto b = random_residues(rng, 1500, 343, 0.0);
    const auto ref = k::serial::convolve_mod(a, b, 343, 2500);
    std::vector<Integer> A = test::random_coeffs(rng, 600, 1000000), B = test::random_coeffs(rng, 600, 1000000, 0.5);
    const auto ref_z = k::serial::convolve(A, B, 900);
    for (int threads : {1, 2, 3, 8}) {
        k::set_threads(threads);
        CHECK(k::convolve_mod(a, b, 343, 2500) == ref);
        CHECK(k::convolve(A, B, 900) == ref_z);
    }
    k::set_threads(0);
    CHECK(k::max_threads() >= 1);
}

TEST_CASE("reciprocals invert under multiplication")
{
    std::mt19937_64 rng(13);
    for (k::residue m : {5u, 49u, 1000003u}) {
        auto a = random_residues(rng, 400, m, 0.5);
        a[0] = 3;
        const auto inv = k::invert_mod(a, m, 400);
        CHECK(inv == k::serial::invert_mod(a, m, 400));
        auto one = k::convolve_mod(a, inv, m, 400);
        CHECK(one[0] == 1);
        CHECK(std::all_of(one.begin() + 1, one.end(), [](k::residue x) { return x == 0; }));
    }
    auto A = test::random_coeffs(rng, 200, 50, 0.3);
    A[0] = -1;
    const auto inv = k::invert(A, 200);
    CHECK(inv == k::serial::invert(A, 200));
    const auto one = test::naive_product(A, inv, 200);
    CHECK(one[0] == 1);
    CHECK(std::all_of(one.begin() + 1, one.end(), [](const Integer& x) { return x == 0; }));
}

TEST_CASE("inverse_mod")
{
    CHECK(k::inverse_mod(3, 7) == 5);
    CHECK(k::inverse_mod(1, 2) == 1);
    for (k::residue a = 1; a < 49; ++a)
        if (a % 7 != 0)
            CHECK((static_cast<std::uint64_t>(k::inverse_mod(a, 49)) * a) % 49 == 1);
}
