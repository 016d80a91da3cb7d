#include <algorithm>

#include "doctest.h"
#include "ecl/deficiency.hpp"
#include "ecl/gen.hpp"
#include "ecl/maximal.hpp"

using namespace ecl;

namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }
Multigraph c5() {
    return Multigraph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}});
}

const DeficiencyRecord& record_of(const DeficiencyReport& rep, int v) {
    auto it = std::find_if(rep.records.begin(), rep.records.end(),
                           [v](const DeficiencyRecord& r) { return r.v == v; });
    REQUIRE(it != rep.records.end());
    return *it;
}

// Hand-built partial subgraph around a hub vertex 0, k = 4. Neighbors:
//   1: doubled class, one copy in M       -> in U^4(0)
//   2: single class, edge in M            -> in F^4(0) only
//   3: single class, edge outside M,      -> in U^4(0), saturated to d_M = 3
//      with three colored stub edges
// Stub vertices 4..7 pad the d_M values.
MaximalSubgraphCertificate hub_configuration(const Multigraph& g) {
    PartialColoring col(g, 4);
    col.set_color(g.instance_id(0, 1, 0), 0);
    col.set_color(g.instance_id(0, 2, 0), 1);
    col.set_color(g.instance_id(3, 4, 0), 0);
    col.set_color(g.instance_id(3, 5, 0), 1);
    col.set_color(g.instance_id(3, 6, 0), 2);
    col.set_color(g.instance_id(2, 7, 0), 0);
    std::vector<EdgeInstance> uncolored{{0, 1, 1}, {0, 3, 0}};
    return MaximalSubgraphCertificate{std::move(col), std::move(uncolored), false};
}

}  // namespace

TEST_CASE("local sets on the hub configuration") {
    Multigraph g(8, {{0, 1, 2}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}, {3, 5, 1}, {3, 6, 1},
                     {2, 7, 1}});
    auto cert = hub_configuration(g);
    REQUIRE(cert.coloring.is_proper());
    CHECK(cert.coloring.d_M(0) == 2);
    CHECK(cert.coloring.d_M(3) == 3);

    LocalSets ls = local_sets(cert, 0);
    CHECK(ls.Fk == VertexSet(0b1110));  // {1,2,3}: all pass d_M(w) <= 4 - mu
    CHECK(ls.Uk == VertexSet(0b1010));  // {1,3}: classes with an uncolored copy
    CHECK(ls.dF == 4);                  // both copies to 1, plus 2 and 3

    DeficiencyReport rep = observe_deficiency(cert);
    const auto& r = record_of(rep, 0);
    CHECK(r.d_M == 2);
    // u-terms: (k - d_M(1) - mu(0,1)) + (k - d_M(3) - mu(0,3)) = 1 + 0
    CHECK(r.u_sum == 1);
    CHECK(r.dF_local == 4);
    CHECK(r.slack_main == 2 - 1 - 4);  // hand-built M is far from maximal
    CHECK(rep.F.contains(0));
    CHECK(r.slack_simple == r.d_M - r.d_F_global);
}

TEST_CASE("global deficient set arithmetic") {
    auto cert = maximal_colorable_subgraph(c5(), 2);
    REQUIRE(cert.uncolored.size() == 1);
    // M is a 4-edge path; F is exactly its two endpoints, and the rejected
    // edge joins them.
    VertexSet F = global_deficient_set(cert);
    CHECK(F.size() == 2);
    for (int v : F.members()) CHECK(cert.coloring.d_M(v) <= 1);
    const auto& e = cert.uncolored[0];
    CHECK(F.contains(e.v));
    CHECK(F.contains(e.w));
}

TEST_CASE("theorem verifiers require certificate grade") {
    auto cert = maximal_colorable_subgraph(triangle(), 2);
    CHECK(check_theorem_simple(cert).simple_ok);
    CHECK(check_theorem_main(cert).main_ok);

    std::vector<int> order(triangle().edge_count());
    for (int i = 0; i < (int)order.size(); ++i) order[i] = i;
    auto greedy = greedy_augmented_subgraph(triangle(), 2, order);
    CHECK_FALSE(greedy.certificate_grade);
    CHECK_THROWS_AS(check_theorem_simple(greedy), std::invalid_argument);
    DeficiencyReport rep = observe_deficiency(greedy);  // observational path is open
    CHECK(rep.k == 2);
}

TEST_CASE("degree bounds hold on every maximal subgraph of small multigraphs") {
    for (const auto& g : all_multigraphs(4, 2)) {
        if (g.edge_count() == 0) continue;
        for (int k = 1; k <= 3; ++k) {
            if (k >= g.d_mu_max()) continue;
            for (const auto& cert : all_maximal_subgraphs(g, k)) {
                DeficiencyReport rep = check_theorem_main(cert);
                CHECK(rep.simple_ok);
                CHECK(rep.main_ok);
                for (const auto& r : rep.records) {
                    CHECK(r.slack_simple >= 0);
                    CHECK(r.slack_main >= 0);
                    // the refined bound dominates the simple one
                    CHECK(r.u_sum + r.dF_local >= 0);
                }
            }
        }
    }
}

TEST_CASE("induced subgraph on F stays sparse for simple hosts") {
    for (const auto& g : all_simple_graphs(5)) {
        if (g.edge_count() == 0) continue;
        for (int k = 1; k <= 3; ++k) {
            auto cert = maximal_colorable_subgraph(g, k);
            CHECK(check_corollary_maxdelta(cert));
        }
    }
    auto multi = maximal_colorable_subgraph(Multigraph(2, {{0, 1, 2}}), 1);
    CHECK_THROWS_AS(check_corollary_maxdelta(multi), std::invalid_argument);
}

TEST_CASE("critical edges") {
    auto k3 = critical_edges(triangle());
    CHECK(k3.size() == 3);  // chi' drops from 3 to 2 whichever edge goes

    Multigraph p3(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(critical_edges(p3).size() == 2);

    Multigraph k4 = Multigraph::join(1, triangle());
    // chi'(K4) = 3 = chi'(K4 - e): no critical edges at all
    CHECK(critical_edges(k4).empty());

    CHECK_THROWS_AS(critical_edges(Multigraph(3)), std::invalid_argument);
}

TEST_CASE("adjacency lemma at critical edges") {
    ValResult r = check_val_simple(triangle(), 0, 1);
    CHECK(r.precondition_ok);
    CHECK(r.required == 1);  // chi' - (d(x)+1) + 1 = 3 - 3 + 1
    CHECK(r.neighbor_count == 1);
    CHECK(r.bound_holds);

    ValResult c = check_val_simple(c5(), 0, 1);
    CHECK(c.precondition_ok);
    CHECK(c.bound_holds);

    // class-1 graph: not evaluated
    Multigraph k4 = Multigraph::join(1, triangle());
    CHECK_FALSE(check_val_simple(k4, 0, 1).precondition_ok);

    // exhaustive over small class-2 graphs
    for (const auto& g : all_simple_graphs(5)) {
        if (g.edge_count() == 0 || chromatic_index(g) != g.delta() + 1) continue;
        for (int x = 0; x < g.n(); ++x)
            for (int y = 0; y < g.n(); ++y) {
                if (x == y || g.mult(x, y) == 0) continue;
                ValResult v = check_val_simple(g, x, y);
                if (v.precondition_ok) CHECK(v.bound_holds);
            }
    }
}
