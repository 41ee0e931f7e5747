#include <random>

#include <gtest/gtest.h>

#include <tihany/chromatic.hpp>
#include <tihany/lab.hpp>

#include "oracles.hpp"

using namespace tihany;

namespace {

void check_chi_certificate(const Graph& g) {
    ChiCertificate cert = chi_alpha2(g);
    ASSERT_EQ((g.order() + cert.witness.odd_components - cert.witness.p.size()) % 2, 0);
    ASSERT_EQ(cert.chi, (g.order() + cert.witness.odd_components - cert.witness.p.size()) / 2);
    ASSERT_EQ(chi_lower_bound(g, cert.witness.p), cert.chi);
    const auto& classes = materialize_coloring(g, cert);
    ASSERT_EQ(static_cast<int>(classes.size()), cert.chi);
    ASSERT_TRUE(is_proper_coloring(g, classes));
    for (VertexSet c : classes) ASSERT_LE(c.size(), 2);
}

} // namespace

TEST(ChiAlpha2, Examples) {
    EXPECT_EQ(chi_alpha2(complete_graph(5)).chi, 5);
    EXPECT_EQ(chi_alpha2(cycle_graph(5)).chi, 3);
    EXPECT_EQ(chi_alpha2(example1(3, 3)).chi, 5);
    EXPECT_EQ(chi_alpha2(Graph(0)).chi, 0);
}

TEST(ChiAlpha2, RejectsAlphaThree) {
    try {
        chi_alpha2(cycle_graph(6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AlphaTooLarge);
    }
}

TEST(ChiAlpha2, WithinUsesParentLabels) {
    const Graph g = example2(3, 4);
    const VertexSet side{0, 1, 2, 3, 4, 5, 6};
    const ChiCertificate cert = chi_alpha2_within(g, side);
    EXPECT_TRUE(cert.witness.p.subset_of(side));
    EXPECT_EQ(cert.chi, chi_alpha2(induced(g, side).graph).chi);
    EXPECT_EQ(chi_alpha2_value_within(complement(g), side), cert.chi);
}

TEST(ChiLowerBound, Examples) {
    EXPECT_EQ(chi_lower_bound(cycle_graph(5), VertexSet{}), 3);
    EXPECT_EQ(chi_lower_bound(complete_graph(4), VertexSet{}), 4);
    EXPECT_EQ(chi_lower_bound(cycle_graph(5), VertexSet::first(5)), 0);
    EXPECT_THROW(chi_lower_bound(cycle_graph(5), VertexSet{7}), Error);
    EXPECT_THROW(chi_lower_bound(Graph(3), VertexSet{}), Error);
}

TEST(ChiBruteforce, Examples) {
    EXPECT_EQ(chi_bruteforce(cycle_graph(5)), 3);
    Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    EXPECT_EQ(chi_bruteforce(k4_minus), 3);
    EXPECT_EQ(chi_bruteforce(example2(3, 4)), 6);
    EXPECT_EQ(chi_bruteforce(petersen_graph()), 3);
    EXPECT_EQ(chi_bruteforce(Graph(0)), 0);
    try {
        chi_bruteforce(complete_graph(15));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
}

TEST(ChiBruteforce, MatchesPlainBacktracking) {
    for (int n = 0; n <= 5; ++n)
        oracle::for_each_graph(n, [](const Graph& g) { ASSERT_EQ(chi_bruteforce(g), oracle::chi(g)); });
    std::mt19937_64 rng(31);
    for (int i = 0; i < 2000; ++i) {
        const Graph g = oracle::random_graph(6 + static_cast<int>(rng() % 5), rng);
        ASSERT_EQ(chi_bruteforce(g), oracle::chi(g));
    }
}

TEST(ChiAlpha2, ExhaustiveAgainstBruteforce) {
    for (int n = 1; n <= 8; ++n)
        enumerate_alpha2(n, false, [](const Graph& g) { ASSERT_EQ(chi_alpha2(g).chi, chi_bruteforce(g)); });
}

TEST(ChiAlpha2, RandomAgainstBruteforce) {
    for (std::uint64_t seed = 0; seed < 5000; ++seed) {
        const Graph g = random_alpha2(2 + static_cast<int>(seed % 13), seed);
        ASSERT_EQ(chi_alpha2(g).chi, chi_bruteforce(g)) << serialize_graph6(g);
    }
}

TEST(ChiAlpha2, CertificatesAreSound) {
    for (int n = 1; n <= 6; ++n) enumerate_alpha2(n, false, check_chi_certificate);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) check_chi_certificate(random_alpha2(1 + static_cast<int>(seed % 40), seed));
}

TEST(ChiLowerBound, NeverExceedsChiAndParityHolds) {
    std::mt19937_64 rng(32);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Graph g = random_alpha2(1 + static_cast<int>(seed % 20), seed);
        const VertexSet p(rng() & g.vertices().bits());
        const int odd = odd_components_within(complement(g), g.vertices() - p);
        ASSERT_EQ((g.order() + odd - p.size()) % 2, 0);
        ASSERT_LE(chi_lower_bound(g, p), chi_alpha2(g).chi);
    }
}
