#include "misbound/edge_list.hpp"
#include "misbound/error.hpp"
#include "misbound/graph6.hpp"
#include "misbound/verify.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace misbound;

namespace {

Graph6Fault fault_of(std::string_view text, PadBits pad = PadBits::strict)
{
    try {
        decode_graph6(text, pad);
    } catch (const Graph6Error& e) {
        return e.fault();
    }
    ADD_FAILURE() << "no Graph6Error for '" << text << "'";
    return Graph6Fault::malformed;
}

} // namespace

// Vectors agree with networkx.to_graph6_bytes.
TEST(Graph6, KnownVectors)
{
    EXPECT_EQ(encode_graph6(complete_graph(3)), "Bw");
    EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(encode_graph6(empty_graph(2)), "A?");
    EXPECT_EQ(encode_graph6(Graph{}), "?");
    EXPECT_EQ(decode_graph6("Bw"), complete_graph(3));
    EXPECT_EQ(decode_graph6("C~"), complete_graph(4));
    EXPECT_EQ(decode_graph6("A?"), empty_graph(2));
    EXPECT_EQ(decode_graph6("?"), Graph{});
}

TEST(Graph6, Errors)
{
    EXPECT_EQ(fault_of("B"), Graph6Fault::wrong_length);
    EXPECT_EQ(fault_of("Bww"), Graph6Fault::wrong_length);
    EXPECT_EQ(fault_of(""), Graph6Fault::malformed);
    EXPECT_EQ(fault_of("B "), Graph6Fault::malformed);
    EXPECT_EQ(fault_of("B\x7f"), Graph6Fault::malformed);
    // K_3 uses 3 of 6 bits; 'x' sets a pad bit.
    EXPECT_EQ(fault_of("Bx"), Graph6Fault::nonzero_padding);
    EXPECT_EQ(decode_graph6("Bx", PadBits::lenient), complete_graph(3));
    EXPECT_THROW(decode_graph6("~"), CapacityError);
    EXPECT_THROW(encode_graph6(empty_graph(63)), CapacityError);
}

TEST(Graph6, BodyOrderMatchesSweepCodes)
{
    // Single edge at pair k must land at bit k of the body, MSB first.
    for (int n = 2; n <= 11; ++n)
        for (std::int64_t k = 0; k < pair_count(n); ++k) {
            const Graph g = graph_from_edge_code(n, std::uint64_t{1} << k);
            const std::string text = encode_graph6(g);
            const int byte = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + k / 6)]) - 63;
            EXPECT_EQ(byte, 1 << (5 - k % 6));
        }
}

TEST(Graph6, RoundTripExhaustiveSmall)
{
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)); ++code) {
            const Graph g = graph_from_edge_code(n, code);
            const std::string text = encode_graph6(g);
            ASSERT_EQ(decode_graph6(text), g);
            ASSERT_EQ(encode_graph6(decode_graph6(text)), text);
        }
}

TEST(Graph6, RoundTripRandomLarge)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = random_graph(static_cast<int>(rng() % 63), rng);
        EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
    }
}

TEST(Graph6, ReadsLines)
{
    std::istringstream in(">>graph6<<Bw\r\n\nC~\nA?\n");
    const auto graphs = read_graph6_lines(in);
    ASSERT_EQ(graphs.size(), 3U);
    EXPECT_EQ(graphs[0], complete_graph(3));
    EXPECT_EQ(graphs[1], complete_graph(4));
    EXPECT_EQ(graphs[2], empty_graph(2));
}

TEST(EdgeList, Parse)
{
    EXPECT_EQ(parse_edge_list("n 3\n0 1\n1 2\n0 2\n"), complete_graph(3));
    EXPECT_EQ(parse_edge_list("# comment\n  n 4  # four\n\n0 1\n1 0\n0 1\n"),
              Graph::from_edges(4, std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(parse_edge_list("n 0\n"), Graph{});
    EXPECT_THROW(parse_edge_list("n 2\n0 0\n"), DomainError);
    EXPECT_THROW(parse_edge_list("n 2\n0 2\n"), DomainError);
    EXPECT_THROW(parse_edge_list("n 2\n0 x\n"), FormatError);
    EXPECT_THROW(parse_edge_list("n 2\n0 1 2\n"), FormatError);
    EXPECT_THROW(parse_edge_list("0 1\n"), FormatError);
    EXPECT_THROW(parse_edge_list(""), FormatError);
    EXPECT_THROW(parse_edge_list("n 65\n"), CapacityError);
}

TEST(EdgeList, Format)
{
    EXPECT_EQ(format_edge_list(moon_moser(7)),
              "n 7\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 5\n4 6\n5 6\n");
    EXPECT_EQ(format_edge_list(empty_graph(2)), "n 2\n");
}

TEST(EdgeList, RoundTripRandom)
{
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(static_cast<int>(rng() % 65), rng);
        EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
    }
}
