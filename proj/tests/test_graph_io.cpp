#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>

#include "becurv/families.hpp"
#include "becurv/graph.hpp"
#include "becurv/graph_io.hpp"

using becurv::ParseError;
using becurv::WeightedGraph;
namespace families = becurv::families;

TEST_CASE("edge list parsing: directives, comments, defaults") {
    const std::string text =
        "# a small weighted graph\n"
        "e a b\n"
        "\n"
        "e b c 2.5\n"
        "v d\n";
    auto g = becurv::parse_edge_list(text, WeightedGraph::Preset::non_normalized);
    CHECK(g.order() == 4);
    CHECK(g.num_edges() == 2);
    CHECK(g.edge_weight(g.index_of("a"), g.index_of("b")) == 1.0);
    CHECK(g.edge_weight(g.index_of("b"), g.index_of("c")) == 2.5);
    CHECK(g.degree(g.index_of("d")) == 0);
    CHECK_FALSE(g.unweighted());

    // Trailing comments on directive lines.
    auto g2 = becurv::parse_edge_list("e a b # the only edge\n",
                                      WeightedGraph::Preset::non_normalized);
    CHECK(g2.num_edges() == 1);
}

TEST_CASE("edge list parsing is order-insensitive") {
    auto a = becurv::parse_edge_list("e x y\ne y z 3\nv w\n",
                                     WeightedGraph::Preset::normalized);
    auto b = becurv::parse_edge_list("v w\ne y z 3\ne x y\n",
                                     WeightedGraph::Preset::normalized);
    CHECK(a == b);
}

TEST_CASE("measure lines require the custom preset") {
    const std::string with_m = "e a b\nm a 2\n";
    CHECK_THROWS_AS(becurv::parse_edge_list(with_m, WeightedGraph::Preset::non_normalized),
                    ParseError);
    CHECK_THROWS_AS(becurv::parse_edge_list(with_m, WeightedGraph::Preset::normalized),
                    ParseError);
    auto g = becurv::parse_edge_list(with_m, WeightedGraph::Preset::custom);
    CHECK(g.measure(g.index_of("a")) == 2.0);
    CHECK(g.measure(g.index_of("b")) == 1.0);  // default

    // The custom preset without any m line is rejected rather than silently
    // defaulting everything.
    CHECK_THROWS_AS(becurv::parse_edge_list("e a b\n", WeightedGraph::Preset::custom),
                    ParseError);
}

TEST_CASE("edge list parse errors carry line numbers") {
    auto expect_error_with = [](const std::string& text, const std::string& needle) {
        try {
            becurv::parse_edge_list(text, WeightedGraph::Preset::non_normalized);
            FAIL("expected ParseError for: ", text);
        } catch (const ParseError& e) {
            CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                          "message '", e.what(), "' should mention '", needle, "'");
        }
    };
    expect_error_with("e a\n", "line 1");                 // missing endpoint
    expect_error_with("e a b\nq x y\n", "line 2");        // unknown directive
    expect_error_with("e a b\ne a b\n", "line 2");        // duplicate edge
    expect_error_with("e a a\n", "line 1");               // self loop
    expect_error_with("e a b 0\n", "line 1");             // weight must be positive
    expect_error_with("e a b -2\n", "line 1");
    expect_error_with("e a b zebra\n", "line 1");         // non-numeric weight
    expect_error_with("v\n", "line 1");                   // missing name
    expect_error_with("e a b 1 extra\n", "line 1");       // trailing tokens
}

TEST_CASE("serialization is canonical and round-trips") {
    // Vertices and edges come back sorted naturally; weight 1 is omitted.
    WeightedGraph::Builder b;
    b.add_edge("v10", "v2", 1.0);
    b.add_edge("v2", "v1", 0.5);
    b.add_vertex("iso");
    auto g = b.build(WeightedGraph::Preset::non_normalized);

    std::string text = becurv::serialize_edge_list(g);
    CHECK(text == "v iso\ne v1 v2 0.5\ne v2 v10\n");

    auto g2 = becurv::parse_edge_list(text, WeightedGraph::Preset::non_normalized);
    CHECK(g == g2);
    CHECK(becurv::serialize_edge_list(g2) == text);  // idempotent

    SUBCASE("custom preset lists every vertex measure") {
        WeightedGraph::Builder c;
        c.add_edge("a", "b", 2.0);
        c.set_measure("b", 0.25);
        auto gc = c.build(WeightedGraph::Preset::custom);
        std::string tc = becurv::serialize_edge_list(gc);
        CHECK(tc == "e a b 2\nm a 1\nm b 0.25\n");
        auto gc2 = becurv::parse_edge_list(tc, WeightedGraph::Preset::custom);
        CHECK(gc == gc2);
    }
}

TEST_CASE("format_double picks the shortest exact representation") {
    CHECK(becurv::format_double(1.0) == "1");
    CHECK(becurv::format_double(0.5) == "0.5");
    CHECK(becurv::format_double(0.1) == "0.1");
    CHECK(becurv::format_double(-2.0) == "-2");
    CHECK(becurv::format_double(1e100) == "1e+100");

    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 500; ++i) {
        double x = u(rng);
        if (i % 7 == 0) x = 1.0 / u(rng);
        std::string s = becurv::format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    // A value that needs all 17 digits.
    double third = 1.0 / 3.0;
    CHECK(std::strtod(becurv::format_double(third).c_str(), nullptr) == third);
}

TEST_CASE("graph6 encodes known small graphs") {
    // Anchors from the reference format: complete graphs map to all-ones
    // bodies, the empty body is all '?'.
    WeightedGraph::Builder empty0;
    CHECK(becurv::encode_graph6(empty0.build(WeightedGraph::Preset::non_normalized)) == "?");
    CHECK(becurv::encode_graph6(families::complete(1)) == "@");
    CHECK(becurv::encode_graph6(families::complete(2)) == "A_");
    CHECK(becurv::encode_graph6(families::complete(3)) == "Bw");
    CHECK(becurv::encode_graph6(families::complete(4)) == "C~");

    WeightedGraph::Builder iso2;
    iso2.add_vertex("0");
    iso2.add_vertex("1");
    CHECK(becurv::encode_graph6(iso2.build(WeightedGraph::Preset::non_normalized)) == "A?");

    // Column-major upper triangle: P3 as 0-1, 1-2 sets bits (0,1) and (1,2).
    CHECK(becurv::encode_graph6(families::path(3)) == "Bg");
}

TEST_CASE("graph6 rejects weighted graphs") {
    WeightedGraph::Builder b;
    b.add_edge("a", "b", 2.0);
    CHECK_THROWS_AS(becurv::encode_graph6(b.build(WeightedGraph::Preset::non_normalized)),
                    std::invalid_argument);
}

TEST_CASE("graph6 decode round-trips byte-exactly") {
    for (const auto& g : {families::path(1), families::path(7), families::cycle(5),
                          families::star(9), families::petersen(), families::hypercube(4),
                          families::friendship(7), families::complete(6)}) {
        std::string s = becurv::encode_graph6(g);
        auto back = becurv::decode_graph6(s, WeightedGraph::Preset::non_normalized);
        CHECK(becurv::encode_graph6(back) == s);
        CHECK(back.order() == g.order());
        CHECK(back.num_edges() == g.num_edges());
    }
}

TEST_CASE("graph6 decoded labels are decimal positions") {
    auto g = becurv::decode_graph6("Bw", WeightedGraph::Preset::normalized);
    CHECK(g.vertex_names() == std::vector<std::string>{"0", "1", "2"});
    CHECK(g.preset() == WeightedGraph::Preset::normalized);
    CHECK(g.measure(0) == 2.0);  // normalized: degree
}

TEST_CASE("graph6 long-form header at n = 63") {
    // 63 is the first order that needs the 4-byte header 126 + 3 sextets.
    WeightedGraph::Builder b;
    for (unsigned i = 0; i < 63; ++i) b.add_vertex(std::to_string(i));
    auto g = b.build(WeightedGraph::Preset::non_normalized);
    std::string s = becurv::encode_graph6(g);
    REQUIRE(s.size() == 4 + (63 * 62 / 2 + 5) / 6);
    CHECK(s[0] == '~');
    CHECK(s.substr(1, 3) == "??~");  // 63 = 000000 000000 111111
    auto back = becurv::decode_graph6(s);
    CHECK(back.order() == 63);
    CHECK(back.num_edges() == 0);
}

TEST_CASE("graph6 strict decoding rejects malformed input") {
    // Valid anchors first, to make sure the rejections below are real.
    CHECK_NOTHROW(becurv::decode_graph6("?"));
    CHECK_NOTHROW(becurv::decode_graph6("A_"));

    CHECK_THROWS_AS(becurv::decode_graph6(""), ParseError);
    CHECK_THROWS_AS(becurv::decode_graph6("A_ "), ParseError);   // stray byte
    CHECK_THROWS_AS(becurv::decode_graph6("A"), ParseError);     // body too short
    CHECK_THROWS_AS(becurv::decode_graph6("A__"), ParseError);   // body too long
    CHECK_THROWS_AS(becurv::decode_graph6("A!"), ParseError);    // char below 63
    CHECK_THROWS_AS(becurv::decode_graph6(std::string("A") + char(127)), ParseError);
    CHECK_THROWS_AS(becurv::decode_graph6("A`"), ParseError);    // padding bit set

    // Non-minimal header: n = 5 written in the long form must be rejected
    // even though the bits themselves are fine.
    std::string long_form = "~??D??";
    CHECK_THROWS_AS(becurv::decode_graph6(long_form), ParseError);

    // Header alone claiming a big graph with no body.
    CHECK_THROWS_AS(becurv::decode_graph6("~?~?"), ParseError);
}

TEST_CASE("graph6 encode/decode agree with edge list round-trips") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int iter = 0; iter < 100; ++iter) {
        unsigned n = 1 + rng() % 9;
        WeightedGraph::Builder b;
        for (unsigned v = 0; v < n; ++v) b.add_vertex(std::to_string(v));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (u(rng) < 0.4) b.add_edge(std::to_string(i), std::to_string(j));
        auto g = b.build(WeightedGraph::Preset::non_normalized);

        auto via_g6 = becurv::decode_graph6(becurv::encode_graph6(g),
                                            WeightedGraph::Preset::non_normalized);
        auto via_el = becurv::parse_edge_list(becurv::serialize_edge_list(g),
                                              WeightedGraph::Preset::non_normalized);
        CHECK(via_g6 == g);
        CHECK(via_el == g);
    }
}
