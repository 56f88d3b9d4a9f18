#include <cmath>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "turan/oracle.hpp"
#include "turan/shadow.hpp"

namespace turan
{
namespace
{

using namespace turan::testing;

std::uint64_t shadow_clique_total(const Graph& g, const TuranShadow& sh)
{
    std::uint64_t total = 0;
    for (const auto& e : sh.entries) total += count_cliques_in(g, e.vertices, e.ell);
    return total;
}

TEST(TuranDensity, ExactBoundary)
{
    // C_5 and K_{2,3} have no triangle; 7 edges on 5 vertices force one
    EXPECT_FALSE(above_turan_density(5, 5, 3));
    EXPECT_FALSE(above_turan_density(6, 5, 3));
    EXPECT_TRUE(above_turan_density(7, 5, 3));
    // path on 3 vertices: 2 of 3 pairs but no triangle
    EXPECT_FALSE(above_turan_density(2, 3, 3));
    EXPECT_TRUE(above_turan_density(3, 3, 3));
    // K_6 for ell = 4
    EXPECT_TRUE(above_turan_density(15, 6, 4));
    // ell = 2: any edge suffices
    EXPECT_FALSE(above_turan_density(0, 4, 2));
    EXPECT_TRUE(above_turan_density(1, 4, 2));
    EXPECT_FALSE(above_turan_density(0, 0, 3));
    // T_{6,3} = K_{2,2,2} has 12 edges and no K_4
    EXPECT_FALSE(above_turan_density(12, 6, 4));
    EXPECT_TRUE(above_turan_density(13, 6, 4));
}

TEST(TuranDensity, DenseSetsContainCliques)
{
    // every graph on up to 6 vertices that passes the test has an ell-clique
    for (std::size_t n = 1; n <= 6; ++n) {
        EdgeList pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), Vertex{0});
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            EdgeList edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) edges.push_back(pairs[i]);
            const Graph g = make_graph(n, edges);
            for (int ell = 3; ell <= 5; ++ell) {
                if (above_turan_density(edges.size(), n, ell)) {
                    ASSERT_GT(count_cliques_in(g, all, ell), 0u);
                }
            }
        }
    }
}

TEST(ShadowFinder, DenseRootIsKeptWhole)
{
    const Graph g = complete(6);
    const auto sh = shadow_finder(g, 4);
    ASSERT_EQ(sh.entries.size(), 1u);
    EXPECT_EQ(sh.entries[0].ell, 4);
    EXPECT_EQ(sh.entries[0].vertices, (VertexSet{0, 1, 2, 3, 4, 5}));
    const auto st = shadow_stats(sh);
    EXPECT_EQ(st.set_count, 1u);
    EXPECT_EQ(st.representation_size, 6u);
    EXPECT_EQ(st.depth_reached, 0);
}

// Hand trace on C_5 with smallest-ID ties: peel 0 (out {1,4}), then 1 ({2}),
// 2 ({3}), 3 ({4}), 4 ({}). Only {1,4} has at least two vertices.
TEST(ShadowFinder, FiveCycleTrace)
{
    const Graph g = cycle(5);
    const auto sh = shadow_finder(g, 3);
    ASSERT_EQ(sh.entries.size(), 1u);
    EXPECT_EQ(sh.entries[0], (ShadowEntry{{1, 4}, 2}));
    const auto st = shadow_stats(sh);
    EXPECT_EQ(st.set_count, 1u);
    EXPECT_EQ(st.representation_size, 2u);
    EXPECT_EQ(st.max_set_size, 2u);
    EXPECT_EQ(st.ell_histogram[2], 1u);
    EXPECT_EQ(st.depth_reached, 1);
    EXPECT_EQ(shadow_clique_total(g, sh), 0u);
}

TEST(ShadowFinder, RejectsSmallK)
{
    EXPECT_THROW(shadow_finder(complete(4), 2), std::invalid_argument);
    EXPECT_THROW(shadow_finder(complete(4), 65), std::invalid_argument);
}

TEST(ShadowFinder, TinyGraphs)
{
    EXPECT_TRUE(shadow_finder(make_graph(0, {}), 3).entries.empty());
    // K_3 is denser than the 4-clique threshold but too small to hold one
    EXPECT_TRUE(shadow_finder(complete(3), 4).entries.empty());
    EXPECT_TRUE(shadow_finder(path(10), 3).entries.empty());
}

TEST(ShadowFinder, ValidOnErdosRenyiK5)
{
    const Graph g = erdos_renyi(80, 0.4, 2024);
    const auto sh = shadow_finder(g, 5);
    EXPECT_EQ(shadow_clique_total(g, sh), exact_kclique_count(g, 5).count);
}

void check_shadow(const Graph& g, int k)
{
    const auto sh = shadow_finder(g, k);
    const auto alpha = degeneracy_order(g).alpha;
    EXPECT_EQ(shadow_clique_total(g, sh), exact_kclique_count(g, k).count) << "k=" << k;

    std::uint64_t rep = 0;
    std::size_t max_size = 0;
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& e : sh.entries) {
        rep += e.vertices.size();
        max_size = std::max(max_size, e.vertices.size());
        ++hist[static_cast<std::size_t>(e.ell)];
        EXPECT_GE(e.ell, 2);
        EXPECT_LE(e.ell, k);
        EXPECT_GE(e.vertices.size(), static_cast<std::size_t>(e.ell));
        EXPECT_TRUE(std::is_sorted(e.vertices.begin(), e.vertices.end()));
        EXPECT_TRUE(std::adjacent_find(e.vertices.begin(), e.vertices.end()) == e.vertices.end());
        if (e.ell >= 3) {
            EXPECT_TRUE(above_turan_density(induced_edge_count(g, e.vertices), e.vertices.size(), e.ell));
        }
        if (e.ell < k) {
            EXPECT_LE(e.vertices.size(), alpha);
        } else {
            EXPECT_EQ(sh.entries.size(), 1u);
        }
    }
    EXPECT_EQ(rep, sh.representation_size);
    EXPECT_EQ(max_size, sh.max_set_size);
    EXPECT_EQ(hist, sh.ell_histogram);
    const double bound = static_cast<double>(g.vertex_count()) * std::pow(static_cast<double>(alpha), k - 2);
    EXPECT_LE(static_cast<double>(sh.entries.size()), std::max(bound, 1.0));
}

TEST(ShadowFinder, ValidityAndSaturationAcrossFamilies)
{
    std::vector<Graph> graphs;
    for (double p : {0.1, 0.2, 0.3, 0.4, 0.5}) graphs.push_back(erdos_renyi(40, p, static_cast<std::uint64_t>(p * 100)));
    graphs.push_back(turan_graph(20, 4));
    graphs.push_back(turan_graph(15, 3));
    graphs.push_back(complete(12));
    graphs.push_back(star(15));
    graphs.push_back(path(15));
    graphs.push_back(planted_cliques(60, 0.05, {9, 7}, 4));
    for (const auto& g : graphs)
        for (int k = 3; k <= 8; ++k) check_shadow(g, k);
}

TEST(ShadowFinder, Deterministic)
{
    const Graph g = erdos_renyi(70, 0.35, 77);
    const auto a = shadow_finder(g, 6);
    const auto b = shadow_finder(g, 6);
    EXPECT_EQ(a.entries, b.entries);
}

TEST(ShadowFinder, DebugDumpFormat)
{
    std::ostringstream os;
    write_shadow(os, shadow_finder(cycle(5), 3));
    EXPECT_EQ(os.str(), "2\t2\t1 4\n");
}

} // namespace
} // namespace turan
