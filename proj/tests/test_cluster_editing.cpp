#include <doctest.h>

#include <random>

#include "enumfpt/cluster_editing.hpp"
#include "enumfpt/oracle.hpp"
#include "test_support.hpp"

using namespace enumfpt;
using namespace enumfpt::testing;

namespace {

Graph path3() {
    Graph g = Graph::with_vertices(3);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

Graph triangle() {
    Graph g = Graph::with_vertices(3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

} // namespace

TEST_CASE("is_cluster") {
    CHECK(is_cluster(triangle()));
    CHECK_FALSE(is_cluster(path3()));

    Graph two_cliques = Graph::with_vertices(5); // K2 + K3
    two_cliques.add_edge(1, 2);
    two_cliques.add_edge(3, 4);
    two_cliques.add_edge(3, 5);
    two_cliques.add_edge(4, 5);
    CHECK(is_cluster(two_cliques));
}

TEST_CASE("min_cluster_edit worked examples") {
    SUBCASE("P3, one edit") {
        auto family = min_cluster_edit({path3(), 1});
        std::vector<OperationSet> expected = {
            {GraphOp::delete_edge(1, 2)},
            {GraphOp::delete_edge(2, 3)},
            {GraphOp::add_edge(1, 3)},
        };
        CHECK(family == normalize_family<GraphOp>(expected));
    }

    SUBCASE("P4: deleting the middle edge is the only single edit") {
        Graph p4 = Graph::with_vertices(4);
        p4.add_edge(1, 2);
        p4.add_edge(2, 3);
        p4.add_edge(3, 4);
        CHECK(min_cluster_edit({p4, 1}) ==
              std::vector<OperationSet>{{GraphOp::delete_edge(2, 3)}});
    }

    SUBCASE("C5 has no single-edit solution") {
        Graph c5 = Graph::with_vertices(5);
        for (int v = 1; v < 5; ++v) c5.add_edge(v, v + 1);
        c5.add_edge(1, 5);
        CHECK(min_cluster_edit({c5, 1}).empty());
    }

    SUBCASE("cluster input") {
        auto family = min_cluster_edit({triangle(), 3});
        REQUIRE(family.size() == 1);
        CHECK(family[0].empty());
    }
}

TEST_CASE("ce_neighbourhood worked examples") {
    SUBCASE("seed maps to the minimal solutions") {
        auto nb = ce_neighbourhood({triangle(), 2}, NbInput<OperationSet>{});
        REQUIRE(nb.size() == 1);
        CHECK(nb[0].empty());
    }

    SUBCASE("splitting the triangle") {
        auto nb = ce_neighbourhood({triangle(), 2}, NbInput<OperationSet>(OperationSet{}));
        std::vector<OperationSet> expected = {
            make_solution<GraphOp>({GraphOp::delete_edge(1, 2), GraphOp::delete_edge(1, 3)}),
            make_solution<GraphOp>({GraphOp::delete_edge(1, 2), GraphOp::delete_edge(2, 3)}),
            make_solution<GraphOp>({GraphOp::delete_edge(1, 3), GraphOp::delete_edge(2, 3)}),
        };
        CHECK(nb == normalize_family<GraphOp>(expected));
    }

    SUBCASE("merging two isolated vertices") {
        Graph two = Graph::with_vertices(2);
        auto nb = ce_neighbourhood({two, 1}, NbInput<OperationSet>(OperationSet{}));
        std::vector<OperationSet> expected = {{GraphOp::add_edge(1, 2)}};
        CHECK(nb == expected);
    }

    SUBCASE("exhausted budget") {
        ClusterInstance x{path3(), 1};
        OperationSet s = {GraphOp::add_edge(1, 3)};
        CHECK(ce_neighbourhood(x, NbInput<OperationSet>(s)).empty());
    }
}

TEST_CASE("merge and split costs are exact") {
    // Merging cliques of sizes i and j adds exactly i*j edges; cutting a
    // clique of size l removes at least l-1.
    Graph g = Graph::with_vertices(5); // K2 {1,2} + K3 {3,4,5}
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    g.add_edge(4, 5);
    ClusterInstance x{g, 6};
    auto nb = ce_neighbourhood(x, NbInput<OperationSet>(OperationSet{}));
    bool saw_merge = false, saw_split_k3 = false, saw_split_k2 = false;
    for (const OperationSet& s : nb) {
        bool all_adds = true, all_dels = true;
        for (const GraphOp& op : s) {
            all_adds = all_adds && op.kind == GraphOp::Kind::AddEdge;
            all_dels = all_dels && op.kind == GraphOp::Kind::DeleteEdge;
        }
        if (all_adds && s.size() == 6) saw_merge = true;       // 2*3 edges
        if (all_dels && s.size() == 2) saw_split_k3 = true;    // 1*2 edges
        if (all_dels && s.size() == 1) saw_split_k2 = true;    // 1*1 edge
        CHECK(is_cluster(apply_ops(g, s)));
    }
    CHECK(saw_merge);
    CHECK(saw_split_k3);
    CHECK(saw_split_k2);
}

TEST_CASE("cluster editing matches the oracle on random instances") {
    std::mt19937 rng(101);
    ClusterEditingContract contract;
    for (int trial = 0; trial < 40; ++trial) {
        ClusterInstance x{random_graph(rng, rand_int(rng, 3, 6), rand_int(rng, 0, 100)),
                          rand_int(rng, 0, 4)};
        auto truth = brute_force(contract, x);

        auto nbf = [](const ClusterInstance& y, const NbInput<OperationSet>& in) {
            return ce_neighbourhood(y, in);
        };
        CHECK(enumerate_to_vector<OperationSet>(x, nbf) == truth.all);
        CHECK(min_cluster_edit(x) == truth.minimal);
        CHECK(neighbourhood_axioms_hold<OperationSet>(x, nbf, truth));
    }
}

TEST_CASE("bespoke and generic neighbourhoods enumerate identically") {
    std::mt19937 rng(102);
    ClusterEditingContract contract;
    for (int trial = 0; trial < 25; ++trial) {
        ClusterInstance x{random_graph(rng, rand_int(rng, 3, 6), rand_int(rng, 0, 100)),
                          rand_int(rng, 0, 3)};
        auto bespoke = [](const ClusterInstance& y, const NbInput<OperationSet>& in) {
            return ce_neighbourhood(y, in);
        };
        auto generic = [&](const ClusterInstance& y, const NbInput<OperationSet>& in) {
            return build_neighbourhood(
                contract, y, [](const ClusterInstance& z) { return min_cluster_edit(z); }, in);
        };
        CHECK(enumerate_to_vector<OperationSet>(x, bespoke) ==
              enumerate_to_vector<OperationSet>(x, generic));
    }
}
