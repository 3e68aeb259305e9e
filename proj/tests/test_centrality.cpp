#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "richnet/centrality.hpp"
#include "richnet/rng.hpp"

using namespace richnet;

TEST_CASE("closeness on a path of three") {
    Graph p3 = fixtures::path_graph(3);
    auto cc = closeness_all(p3);
    CHECK(cc.scores[1] == doctest::Approx(1.0));   // (1/2)(1 + 1)
    CHECK(cc.scores[0] == doctest::Approx(0.75));  // (1/2)(1 + 1/2)
    CHECK(cc.scores[2] == doctest::Approx(0.75));
}

TEST_CASE("closeness treats unreachable pairs as zero contribution") {
    Graph g = Graph::from_index_edges(4, {{0, 1}, {2, 3}});
    auto cc = closeness_all(g);
    for (VertexId v = 0; v < 4; ++v) CHECK(cc.scores[v] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("closeness rejects degenerate graphs") {
    Graph one = Graph::from_index_edges(1, {});
    CHECK_THROWS_AS(closeness_all(one), std::invalid_argument);
}

TEST_CASE("betweenness per-pair on small fixtures") {
    Graph p3 = fixtures::path_graph(3);
    auto bc = betweenness_all(p3);
    CHECK(bc.scores[1] == doctest::Approx(1.0));
    CHECK(bc.scores[0] == doctest::Approx(0.0));
    CHECK(bc.scores[2] == doctest::Approx(0.0));

    // C4: the opposite pair has two shortest paths, one through each side
    Graph c4 = fixtures::cycle_graph(4);
    auto oracle_scores = oracle::betweenness_per_pair(c4);
    auto impl = betweenness_all(c4);
    for (VertexId v = 0; v < 4; ++v) {
        CHECK(impl.scores[v] == doctest::Approx(oracle_scores[v]).epsilon(1e-12));
        CHECK(impl.scores[v] == doctest::Approx(0.5));
    }
}

TEST_CASE("paper-literal variant matches the enumeration oracle") {
    Rng rng(99);
    for (int i = 0; i < 30; ++i) {
        Graph g = fixtures::gnp(4 + static_cast<VertexId>(rng.below(8)), 0.4, rng);
        auto expect = oracle::betweenness_paper_literal(g);
        auto got = betweenness_all(g, BetweennessVariant::paper_literal);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(got.scores[v] == doctest::Approx(expect[v]).epsilon(1e-9));
    }
    // P3 literal: one interior path over three pair-paths
    auto p3 = betweenness_all(fixtures::path_graph(3), BetweennessVariant::paper_literal);
    CHECK(p3.scores[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("oracle equivalence on random graphs up to n = 12") {
    Rng rng(123);
    for (int i = 0; i < 40; ++i) {
        VertexId n = 2 + static_cast<VertexId>(rng.below(11));
        double p = 0.1 + 0.08 * static_cast<double>(rng.below(10));
        Graph g = fixtures::gnp(n, p, rng);

        auto cc_expect = oracle::closeness(g);
        auto cc = closeness_all(g);
        for (VertexId v = 0; v < n; ++v)
            CHECK(cc.scores[v] == doctest::Approx(cc_expect[v]).epsilon(1e-9));

        auto bc_expect = oracle::betweenness_per_pair(g);
        auto bc = betweenness_all(g);
        for (VertexId v = 0; v < n; ++v)
            CHECK(bc.scores[v] == doctest::Approx(bc_expect[v]).epsilon(1e-9));
    }
}

TEST_CASE("relabeling permutes scores") {
    Rng rng(5);
    Graph g = fixtures::gnp(12, 0.3, rng);
    const VertexId n = g.vertex_count();
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);

    std::vector<Edge> mapped;
    for (const Edge& e : g.edges()) mapped.push_back(make_edge(perm[e.u], perm[e.v]));
    Graph h = Graph::from_index_edges(n, mapped);

    auto cg = closeness_all(g);
    auto ch = closeness_all(h);
    auto bg = betweenness_all(g);
    auto bh = betweenness_all(h);
    for (VertexId v = 0; v < n; ++v) {
        CHECK(ch.scores[perm[v]] == doctest::Approx(cg.scores[v]).epsilon(1e-12));
        CHECK(bh.scores[perm[v]] == doctest::Approx(bg.scores[v]).epsilon(1e-12));
    }
}

TEST_CASE("adding an edge never lowers closeness") {
    Rng rng(17);
    Graph g = fixtures::gnp(15, 0.2, rng);
    auto before = closeness_all(g);

    std::vector<Edge> missing;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) missing.push_back({u, v});
    REQUIRE(!missing.empty());

    auto edges = g.edges();
    edges.push_back(missing[rng.below(missing.size())]);
    auto after = closeness_all(Graph::from_index_edges(g.vertex_count(), edges));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        CHECK(after.scores[v] >= before.scores[v] - 1e-12);
}

TEST_CASE("top_k ordering and ties") {
    CentralityScores s{CentralityKind::closeness, {3.0, 1.0, 2.0}};
    CHECK(top_k(s, 2).members == std::vector<VertexId>{0, 2});

    CentralityScores equal{CentralityKind::closeness, {1.0, 1.0, 1.0}};
    CHECK(top_k(equal, 2).members == std::vector<VertexId>{0, 1});

    CHECK(top_k(s, 3).members == std::vector<VertexId>{0, 2, 1});
    CHECK(top_k(s, 10).members.size() == 3);  // k > n returns everything
    CHECK_THROWS_AS(top_k(s, 0), std::invalid_argument);
}

TEST_CASE("top_k is invariant under positive affine transforms") {
    Rng rng(31);
    Graph g = fixtures::gnp(20, 0.25, rng);
    auto scores = closeness_all(g);
    auto base = top_k(scores, 5).members;

    CentralityScores scaled = scores;
    for (double& x : scaled.scores) x = 3.5 * x + 11.0;
    CHECK(top_k(scaled, 5).members == base);
}

TEST_CASE("ground truth of a star is its center, tagged both") {
    Graph star = fixtures::star_graph(5);
    auto hc = ground_truth(star, 1);
    REQUIRE(hc.vertices.size() == 1);
    CHECK(hc.vertices[0] == 0);
    CHECK(hc.tags[0] == HighCentralityTag::both);
}

TEST_CASE("ground truth is the union of the two top-k sets") {
    Rng rng(41);
    Graph g = fixtures::gnp(30, 0.15, rng);
    std::size_t k = 5;
    auto hc = ground_truth(g, k);
    CHECK(hc.vertices.size() >= k);
    CHECK(hc.vertices.size() <= 2 * k);
    CHECK(std::is_sorted(hc.vertices.begin(), hc.vertices.end()));

    auto bc = top_k(betweenness_all(g), k).members;
    auto cc = top_k(closeness_all(g), k).members;
    for (std::size_t i = 0; i < hc.vertices.size(); ++i) {
        bool in_bc = std::find(bc.begin(), bc.end(), hc.vertices[i]) != bc.end();
        bool in_cc = std::find(cc.begin(), cc.end(), hc.vertices[i]) != cc.end();
        CHECK(in_bc == (hc.tags[i] != HighCentralityTag::cc));
        CHECK(in_cc == (hc.tags[i] != HighCentralityTag::bc));
    }
}

TEST_CASE("threaded centrality agrees with serial") {
    Rng rng(53);
    Graph g = fixtures::gnp(60, 0.1, rng);
    auto cc1 = closeness_all(g, 1);
    auto cc4 = closeness_all(g, 4);
    auto bc1 = betweenness_all(g, BetweennessVariant::per_pair, 1);
    auto bc4 = betweenness_all(g, BetweennessVariant::per_pair, 4);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        CHECK(cc4.scores[v] == doctest::Approx(cc1.scores[v]).epsilon(1e-9));
        CHECK(bc4.scores[v] == doctest::Approx(bc1.scores[v]).epsilon(1e-9));
    }
}

TEST_CASE("scores csv is sorted by score, labels preserved") {
    Graph g = parse_edge_list("hub a\nhub b\nhub c\na b");
    auto cc = closeness_all(g);
    std::ostringstream out;
    write_scores_csv(out, g, cc);
    std::istringstream lines(out.str());
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "vertex_label,score");
    CHECK(first.substr(0, 4) == "hub,");

    double previous = 1e300;
    std::string line;
    while (std::getline(lines, line)) {
        double score = std::stod(line.substr(line.find(',') + 1));
        CHECK(score <= previous);
        previous = score;
    }
}
