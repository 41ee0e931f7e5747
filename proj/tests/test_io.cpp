#include <random>

#include <gtest/gtest.h>

#include <tihany/io.hpp>

#include "oracles.hpp"

using namespace tihany;

// Reference strings produced by networkx.to_graph6_bytes.
TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(serialize_graph6(petersen_graph()), "IheA@GUAo");
    EXPECT_EQ(serialize_graph6(cycle_graph(5)), "Dhc");
    EXPECT_EQ(serialize_graph6(complete_graph(63)).substr(0, 10), "~??~~~~~~~");
    EXPECT_EQ(serialize_graph6(path_graph(64)).substr(0, 12), "~?@?hCGGC@?G");
    EXPECT_EQ(serialize_graph6(Graph(0)), "?");
}

TEST(Graph6, SingleVertexRoundTrip) {
    const Graph g(1);
    EXPECT_EQ(serialize_graph6(g), "@");
    EXPECT_EQ(parse_graph6(serialize_graph6(g)), g);
}

TEST(Graph6, FiveCycleRoundTrip) { EXPECT_EQ(parse_graph6(serialize_graph6(cycle_graph(5))), cycle_graph(5)); }

TEST(Graph6, HeaderAndLineEndings) {
    EXPECT_EQ(parse_graph6(">>graph6<<Dhc\r\n"), cycle_graph(5));
    EXPECT_EQ(parse_graph6("Dhc\n"), cycle_graph(5));
}

TEST(Graph6, OutOfRangeByteReportsOffset) {
    try {
        parse_graph6("Dh c");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedInput);
        EXPECT_NE(std::string(e.what()).find("offset 2"), std::string::npos) << e.what();
    }
}

TEST(Graph6, WrongBodyLength) {
    for (const char* bad : {"Dh", "Dhcc", "", "~?"}) {
        try {
            parse_graph6(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::MalformedInput) << bad;
        }
    }
}

TEST(Graph6, OrderAboveCap) {
    try {
        parse_graph6(serialize_graph6(cycle_graph(12)), 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
    // '~' header announcing 65 vertices
    std::string big = "~?A";
    big.push_back(static_cast<char>(63 + 1));
    EXPECT_THROW(parse_graph6(big), Error);
}

TEST(Graph6, RandomRoundTrips) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const Graph g = oracle::random_graph(static_cast<int>(rng() % 31), rng);
        ASSERT_EQ(parse_graph6(serialize_graph6(g)), g);
    }
    for (int n = 58; n <= 64; ++n) {
        const Graph g = oracle::random_graph(n, rng);
        const std::string text = serialize_graph6(g);
        EXPECT_EQ(text[0] == '~', n >= 63);
        ASSERT_EQ(parse_graph6(text), g);
    }
}

TEST(EdgeList, RoundTrip) {
    const Graph pet = petersen_graph();
    const std::string text = serialize_edgelist(pet);
    EXPECT_EQ(text.substr(0, text.find('\n')), "10 15");
    EXPECT_EQ(parse_edgelist(text), pet);
}

TEST(EdgeList, HandAuthored) {
    EXPECT_EQ(parse_edgelist("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"), cycle_graph(5));
    EXPECT_EQ(parse_edgelist("3 0"), Graph(3));
}

TEST(EdgeList, Malformed) {
    for (const char* bad : {"", "x 1", "3 1\n0 3\n", "3 1\n1 1\n", "3 2\n0 1\n", "3 1\n0 1\n1 2\n"}) {
        try {
            parse_edgelist(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::MalformedInput) << bad;
        }
    }
    try {
        parse_edgelist("70 0");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
}
