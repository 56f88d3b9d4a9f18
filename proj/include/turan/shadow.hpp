#ifndef TURAN_SHADOW_HPP
#define TURAN_SHADOW_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "turan/graph.hpp"

namespace turan
{

inline constexpr int max_clique_size = 64;

/// One element (S, ell) of a clique shadow: count ell-cliques inside G|_S.
struct ShadowEntry
{
    VertexSet vertices; ///< global IDs, ascending
    int ell = 0;

    friend bool operator==(const ShadowEntry&, const ShadowEntry&) = default;
    friend auto operator<=>(const ShadowEntry&, const ShadowEntry&) = default;
};

/// True iff edges > (1 - 1/(ell-1)) size^2 / 2, decided in exact integer
/// arithmetic. Normalising by size^2/2 rather than C(size,2) is what makes the
/// Turan bound hold for every size (a 3-vertex path has 2/3 of its pairs as
/// edges and no triangle). It implies edges / C(size,2) > 1 - 1/(ell-1).
/// Requires ell >= 2.
inline bool above_turan_density(std::uint64_t edges, std::uint64_t size, int ell) noexcept
{
    using wide = unsigned __int128;
    return static_cast<wide>(edges) * 2 * static_cast<wide>(ell - 1) >
           static_cast<wide>(ell - 2) * static_cast<wide>(size) * size;
}

/// The k-clique Turán shadow of a graph. Entries form a multiset whose
/// ell-cliques are in bijection with the k-cliques of the graph.
struct TuranShadow
{
    int k = 0;
    std::vector<ShadowEntry> entries;
    std::uint64_t representation_size = 0;
    std::vector<std::uint64_t> ell_histogram; ///< indexed by ell, size k + 1
    std::size_t max_set_size = 0;
};

struct ShadowStats
{
    std::size_t set_count = 0;
    std::uint64_t representation_size = 0;
    std::size_t max_set_size = 0;
    std::vector<std::uint64_t> ell_histogram;
    int depth_reached = 0;
};

namespace detail
{

class ShadowBuilder
{
public:
    ShadowBuilder(const Graph& g, int k) : g_(g)
    {
        shadow_.k = k;
        shadow_.ell_histogram.assign(static_cast<std::size_t>(k) + 1, 0);
    }

    TuranShadow run()
    {
        const int k = shadow_.k;
        const std::uint64_t n = g_.vertex_count();
        if (n == 0) return std::move(shadow_);
        if (above_turan_density(g_.edge_count(), n, k)) {
            // dense root is already saturated and never leaves the working set
            VertexSet all(n);
            for (Vertex v = 0; v < n; ++v) all[v] = v;
            emit(std::move(all), k);
        } else {
            refine(g_, nullptr, k);
        }
        return std::move(shadow_);
    }

private:
    // Replaces (S, ell) by the out-neighborhoods of its degeneracy DAG.
    // `local` is G|_S; `to_global` maps its IDs to the input graph (null for the root).
    void refine(const Graph& local, const VertexSet* to_global, int ell)
    {
        const DegeneracyOrder order = degeneracy_order(local);
        const int child_ell = ell - 1;
        for (Vertex s = 0; s < local.vertex_count(); ++s) {
            VertexSet out = out_neighbors(local, order, s);
            if (out.size() < static_cast<std::size_t>(child_ell)) continue;

            if (child_ell <= 2) {
                emit(globalize(out, to_global), child_ell);
                continue;
            }
            InducedSubgraph child = induced_subgraph(local, out);
            const auto edges = child.graph.edge_count();
            for (auto& v : child.parent_ids) v = to_global ? (*to_global)[v] : v;
            if (above_turan_density(edges, out.size(), child_ell))
                emit(std::move(child.parent_ids), child_ell);
            else
                refine(child.graph, &child.parent_ids, child_ell);
        }
    }

    static VertexSet globalize(VertexSet local_ids, const VertexSet* to_global)
    {
        if (to_global)
            for (auto& v : local_ids) v = (*to_global)[v];
        return local_ids;
    }

    void emit(VertexSet vertices, int ell)
    {
        if (vertices.size() < static_cast<std::size_t>(ell)) return;
        shadow_.representation_size += vertices.size();
        shadow_.max_set_size = std::max(shadow_.max_set_size, vertices.size());
        ++shadow_.ell_histogram[static_cast<std::size_t>(ell)];
        shadow_.entries.push_back({std::move(vertices), ell});
    }

    const Graph& g_;
    TuranShadow shadow_;
};

} // namespace detail

/// Builds the Turán shadow of `g` for k-cliques by iterative refinement over
/// degeneracy-DAG out-neighborhoods. Refinement is depth-first and children
/// are visited in vertex-ID order, so the result is deterministic.
///
/// Entries whose set is smaller than their clique size are dropped since they
/// hold no cliques. A root dense enough to be saturated is returned as-is.
inline TuranShadow shadow_finder(const Graph& g, int k)
{
    if (k < 3 || k > max_clique_size) throw std::invalid_argument("shadow_finder: k must lie in [3, 64]");
    return detail::ShadowBuilder(g, k).run();
}

inline ShadowStats shadow_stats(const TuranShadow& sh)
{
    ShadowStats st;
    st.set_count = sh.entries.size();
    st.representation_size = sh.representation_size;
    st.max_set_size = sh.max_set_size;
    st.ell_histogram = sh.ell_histogram;
    int min_ell = sh.k;
    for (const auto& e : sh.entries) min_ell = std::min(min_ell, e.ell);
    st.depth_reached = sh.k - min_ell;
    return st;
}

/// Debug dump: "ell TAB |S| TAB ids" per entry.
inline void write_shadow(std::ostream& os, const TuranShadow& sh)
{
    for (const auto& e : sh.entries) {
        os << e.ell << '\t' << e.vertices.size() << '\t';
        for (std::size_t i = 0; i < e.vertices.size(); ++i) {
            if (i) os << ' ';
            os << e.vertices[i];
        }
        os << '\n';
    }
}

} // namespace turan

#endif // TURAN_SHADOW_HPP
