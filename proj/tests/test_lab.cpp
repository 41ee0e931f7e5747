#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include <tihany/tihany.hpp>

#include "oracles.hpp"

using namespace tihany;

namespace {

std::set<std::string> oracle_alpha2_graph6(int n) {
    std::set<std::string> out;
    oracle::for_each_graph(n, [&](const Graph& g) {
        if (n >= 2 && oracle::alpha(g) == 2) out.insert(serialize_graph6(g));
    });
    return out;
}

std::set<std::string> oracle_alpha2_classes(int n) {
    std::set<std::string> out;
    oracle::for_each_graph(n, [&](const Graph& g) {
        const Graph comp = complement(g);
        if (comp.edge_count() > 0 && oracle::triangle_free(comp)) out.insert(oracle::canonical_string(g));
    });
    return out;
}

} // namespace

TEST(Enumerate, SmallCounts) {
    EXPECT_EQ(enumerate_alpha2(0, false).size(), 0u);
    EXPECT_EQ(enumerate_alpha2(1, false).size(), 0u);
    const auto two = enumerate_alpha2(2, false);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0], Graph(2));
    EXPECT_EQ(enumerate_alpha2(3, false).size(), 6u);
}

TEST(Enumerate, MatchesOracleAsSets) {
    for (int n = 2; n <= 5; ++n) {
        std::set<std::string> got;
        for (const Graph& g : enumerate_alpha2(n, false)) EXPECT_TRUE(got.insert(serialize_graph6(g)).second);
        EXPECT_EQ(got, oracle_alpha2_graph6(n)) << "n=" << n;
    }
}

TEST(Enumerate, MatchesOracleCounts) {
    for (int n = 6; n <= 7; ++n) {
        long long expected = 0;
        oracle::for_each_graph(n, [&](const Graph& g) {
            const Graph comp = complement(g);
            expected += comp.edge_count() > 0 && oracle::triangle_free(comp);
        });
        EXPECT_EQ(enumerate_alpha2(n, false, [](const Graph&) {}), expected) << "n=" << n;
    }
}

TEST(Enumerate, DedupKeepsOnePerClass) {
    for (int n = 2; n <= 7; ++n) {
        std::set<std::string> classes;
        long long count = enumerate_alpha2(n, true, [&](const Graph& g) {
            EXPECT_TRUE(classes.insert(oracle::canonical_string(g)).second) << "duplicate class at n=" << n;
        });
        EXPECT_EQ(classes, oracle_alpha2_classes(n)) << "n=" << n;
        EXPECT_EQ(count, static_cast<long long>(classes.size()));
    }
}

// Unlabelled triangle-free graphs on 1..7 vertices are 1, 2, 3, 7, 14, 38, 107;
// dropping the edgeless graph leaves the alpha = 2 classes.
TEST(Enumerate, DedupClassCounts) {
    const int expected[] = {0, 0, 1, 2, 6, 13, 37, 106};
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(enumerate_alpha2(n, true, [](const Graph&) {}), expected[n]) << n;
}

TEST(Enumerate, SlicesPartitionTheStream) {
    const long long whole = enumerate_alpha2(7, false, [](const Graph&) {});
    std::set<std::string> seen;
    long long total = 0;
    for (int i = 0; i < 3; ++i)
        total += enumerate_alpha2(7, false, [&](const Graph& g) { seen.insert(serialize_graph6(g)); },
                                  EnumerationSlice{i, 3});
    EXPECT_EQ(total, whole);
    EXPECT_EQ(static_cast<long long>(seen.size()), whole);
}

TEST(Enumerate, Limits) {
    EXPECT_THROW(enumerate_alpha2(11, false, [](const Graph&) {}), Error);
    EXPECT_THROW(enumerate_alpha2(9, true, [](const Graph&) {}), Error);
}

TEST(RandomAlpha2, Deterministic) { EXPECT_EQ(random_alpha2(8, 1), random_alpha2(8, 1)); }

TEST(RandomAlpha2, AlphaAtMostTwo) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Graph g = random_alpha2(12, seed);
        ASSERT_TRUE(is_triangle_free(complement(g)));
        if (complement(g).edge_count() > 0) {
            ASSERT_EQ(independence_number(g), 2);
        }
    }
}

TEST(RandomAlpha2, ThinningKeepsAnEdge) {
    int thinned = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const Graph h = random_maximal_triangle_free(10, seed);
        ASSERT_GT(h.edge_count(), 0);
        // maximal unless thinned: some non-edge could be added without a triangle
        bool maximal = true;
        for (int u = 0; u < 10 && maximal; ++u)
            for (int v = u + 1; v < 10 && maximal; ++v)
                if (!h.adjacent(u, v) && !h.neighbors(u).intersects(h.neighbors(v))) maximal = false;
        thinned += !maximal;
    }
    EXPECT_GT(thinned, 0);
    EXPECT_LT(thinned, 500);
}

TEST(Example1, Small) {
    EXPECT_EQ(example1(2, 2), cycle_graph(5));
    const Graph g = example1(3, 3);
    EXPECT_EQ(g.order(), 7);
    EXPECT_EQ(clique_number(g), 4);
    EXPECT_EQ(chi_alpha2(g).chi, 5);
    EXPECT_FALSE(splittable_bruteforce(example1(3, 4), 3, 5).has_value());
    EXPECT_THROW(example1(3, 2), Error);
    EXPECT_THROW(example1(1, 3), Error);
}

TEST(Example1, MetadataAndTightness) {
    for (int s = 2; s <= 4; ++s)
        for (int t = s; s + t <= 9; ++t) {
            const Graph g = example1(s, t);
            EXPECT_EQ(g.order(), s + t + 1);
            EXPECT_EQ(independence_number(g), 2);
            EXPECT_EQ(clique_number(g), s + t - 2);
            EXPECT_EQ(chi_alpha2(g).chi, s + t - 1);
            EXPECT_EQ(chi_bruteforce(g), s + t - 1);
            EXPECT_FALSE(splittable_bruteforce(g, s, t + 1).has_value()) << s << "," << t;
            EXPECT_FALSE(oracle::splittable(g, s, t + 1)) << s << "," << t;
        }
}

TEST(Example2, Small) {
    const Graph g = example2(3, 4);
    EXPECT_EQ(g.order(), 10);
    EXPECT_EQ(clique_number(g), 4);
    EXPECT_EQ(chi_alpha2(g).chi, 6);
    EXPECT_FALSE(splittable_bruteforce(g, 3, 6).has_value());
    EXPECT_TRUE(splittable_bruteforce(example2(4, 4), 4, 5).has_value());
    EXPECT_THROW(example2(2, 4), Error);
}

// The (s, t+1) partition exists for s >= 4 only; for s in {2,3} both
// oracles agree that none exists although the hypotheses hold.
TEST(Example2, MetadataAndTightness) {
    for (int s = 2; s <= 4; ++s)
        for (int t = std::max(s, 7 - s); s + t <= 9; ++t) {
            const Graph g = example2(s, t);
            EXPECT_EQ(g.order(), s + t + 3);
            EXPECT_EQ(independence_number(g), 2);
            EXPECT_EQ(clique_number(g), s + t - 3);
            EXPECT_EQ(chi_alpha2(g).chi, s + t - 1);
            EXPECT_TRUE(check_hypotheses({g, s, t}).holds);
            EXPECT_FALSE(splittable_bruteforce(g, s, t + 2).has_value()) << s << "," << t;
            const bool plus_one = splittable_bruteforce(g, s, t + 1).has_value();
            EXPECT_EQ(plus_one, s >= 4) << s << "," << t;
            if (g.order() <= 11) {
                EXPECT_EQ(oracle::splittable(g, s, t + 1), plus_one) << s << "," << t;
            }
        }
}

TEST(Sweep, ExhaustiveSmallOrders) {
    SweepOptions opt;
    opt.n_min = 1;
    opt.n_max = 7;
    const SweepReport report = sweep(opt);
    EXPECT_TRUE(report.confirmed());
    EXPECT_EQ(report.graphs_checked, 1 + 6 + 40 + 387 + 5788 + 133500);
    EXPECT_GT(report.instance_count, 0);
    // chi > omega+1 needs at least ten vertices when alpha = 2
    EXPECT_EQ(report.hypothesis_instances, 0);
}

TEST(Sweep, ThreadsDoNotChangeTheReport) {
    SweepOptions opt;
    opt.mode = SweepMode::Random;
    opt.n_min = 10;
    opt.n_max = 13;
    opt.budget = 400;
    opt.seed = 5;
    const std::string one = sweep_report_lines(sweep(opt));
    opt.threads = 4;
    EXPECT_EQ(sweep_report_lines(sweep(opt)), one);
    opt.threads = 1;
    EXPECT_EQ(sweep_report_lines(sweep(opt)), one);
}

TEST(Sweep, ReportInvariantsAndReplay) {
    SweepOptions opt;
    opt.mode = SweepMode::Random;
    opt.n_min = 10;
    opt.n_max = 12;
    opt.budget = 600;
    const SweepReport report = sweep(opt);
    EXPECT_GE(report.instance_count, report.hypothesis_instances);
    EXPECT_GE(report.hypothesis_instances, static_cast<long long>(report.failures.size()));
    long long successes = 0;
    for (auto [b, c] : report.branch_histogram) successes += c;
    EXPECT_EQ(successes + static_cast<long long>(report.failures.size()), report.hypothesis_instances);
    EXPECT_EQ(report.confirmed(), report.failures.empty());
    for (const auto& f : report.failures) {
        EXPECT_LE(f.s, 3);
        EXPECT_EQ(replay(f), f.reason);
    }

    std::istringstream lines(sweep_report_lines(report));
    std::string line;
    std::size_t parsed = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::ordered_json::parse(line);
        if (j["kind"] == "failure") {
            EXPECT_EQ(failure_from_json(line), report.failures[parsed]);
            ++parsed;
        } else {
            EXPECT_EQ(j["hypothesis_instances"], report.hypothesis_instances);
        }
    }
    EXPECT_EQ(parsed, report.failures.size());
}

TEST(Sweep, RejectsBadOptions) {
    SweepOptions opt;
    opt.n_max = 10;
    EXPECT_THROW(sweep(opt), Error);
    opt.n_max = 5;
    opt.n_min = 6;
    EXPECT_THROW(sweep(opt), Error);
    opt.n_min = 1;
    opt.threads = 0;
    EXPECT_THROW(sweep(opt), Error);
    EXPECT_THROW(failure_from_json("{}"), Error);
}
