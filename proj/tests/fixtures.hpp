// Graph generators and independent reference computations used by the tests.
#ifndef TURAN_TESTS_FIXTURES_HPP
#define TURAN_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan::testing
{

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline Graph make_graph(std::size_t n, const EdgeList& edges)
{
    return Graph::from_edges(n, edges);
}

inline EdgeList erdos_renyi_edges(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return edges;
}

inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed)
{
    return make_graph(n, erdos_renyi_edges(n, p, seed));
}

inline Graph complete(std::size_t n)
{
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

inline Graph cycle(std::size_t n)
{
    EdgeList edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return make_graph(n, edges);
}

inline Graph path(std::size_t n)
{
    EdgeList edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return make_graph(n, edges);
}

inline Graph star(std::size_t leaves)
{
    EdgeList edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return make_graph(leaves + 1, edges);
}

/// Complete r-partite graph on n vertices with balanced parts (vertex v in part v mod r).
inline Graph turan_graph(std::size_t n, std::size_t r)
{
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (u % r != v % r) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

/// Preferential-attachment style sparse graph: each new vertex links to
/// `per_step` earlier endpoints chosen proportionally to degree.
inline Graph preferential_attachment(std::size_t n, std::size_t per_step, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    EdgeList edges;
    std::vector<Vertex> endpoints;
    for (Vertex v = 0; v <= per_step; ++v)
        for (Vertex u = 0; u < v; ++u) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    for (Vertex v = static_cast<Vertex>(per_step + 1); v < n; ++v) {
        std::set<Vertex> targets;
        while (targets.size() < per_step) {
            std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
            targets.insert(endpoints[pick(rng)]);
        }
        for (Vertex u : targets) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    return make_graph(n, edges);
}

/// Holme-Kim growth: preferential attachment where, with probability
/// `triad_p`, each further link closes a triangle with the previous target.
/// Produces heavy-tailed degrees with high clustering.
inline Graph clustered_attachment(std::size_t n, std::size_t per_step, double triad_p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution triad(triad_p);
    EdgeList edges;
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<Vertex> endpoints;
    auto link = [&](Vertex u, Vertex v) {
        edges.emplace_back(u, v);
        adj[u].push_back(v);
        adj[v].push_back(u);
        endpoints.push_back(u);
        endpoints.push_back(v);
    };
    for (Vertex v = 1; v <= per_step; ++v)
        for (Vertex u = 0; u < v; ++u) link(u, v);
    for (Vertex v = static_cast<Vertex>(per_step + 1); v < n; ++v) {
        std::set<Vertex> targets;
        Vertex last = endpoints[std::uniform_int_distribution<std::size_t>(0, endpoints.size() - 1)(rng)];
        targets.insert(last);
        while (targets.size() < per_step) {
            Vertex next = last;
            if (triad(rng) && !adj[last].empty())
                next = adj[last][std::uniform_int_distribution<std::size_t>(0, adj[last].size() - 1)(rng)];
            if (targets.count(next))
                next = endpoints[std::uniform_int_distribution<std::size_t>(0, endpoints.size() - 1)(rng)];
            targets.insert(next);
            last = next;
        }
        for (Vertex u : targets) link(u, v);
    }
    return make_graph(n, edges);
}

/// Disjoint-ish dense communities of random sizes in [lo, hi] with internal
/// edge probability `p_in`, joined by a sparse random background.
inline Graph community_graph(std::size_t n, std::size_t lo, std::size_t hi, double p_in, double background_degree,
                             std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    EdgeList edges;
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution inside(p_in);
    std::size_t at = 0;
    while (at < n) {
        const std::size_t size = std::min(n - at, std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j)
                if (inside(rng)) edges.emplace_back(perm[at + i], perm[at + j]);
        at += size;
    }
    const auto extra = static_cast<std::size_t>(background_degree * static_cast<double>(n) / 2);
    std::uniform_int_distribution<Vertex> any(0, static_cast<Vertex>(n - 1));
    for (std::size_t i = 0; i < extra; ++i) edges.emplace_back(any(rng), any(rng));
    return make_graph(n, edges);
}

/// Sparse background plus a few planted cliques of the given sizes.
inline Graph planted_cliques(std::size_t n, double p, const std::vector<std::size_t>& sizes, std::uint64_t seed)
{
    EdgeList edges = erdos_renyi_edges(n, p, seed);
    std::mt19937_64 rng(seed ^ 0xabcdef);
    for (std::size_t size : sizes) {
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        std::shuffle(all.begin(), all.end(), rng);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j) edges.emplace_back(all[i], all[j]);
    }
    return make_graph(n, edges);
}

/// Exact ell-clique count inside G|_S by plain backtracking over S.
/// Shares no code with the library's counters.
inline std::uint64_t count_cliques_in(const Graph& g, const std::vector<Vertex>& s, int ell)
{
    if (ell <= 0) return 1;
    std::uint64_t total = 0;
    std::vector<Vertex> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(chosen.size()) == ell) {
            ++total;
            return;
        }
        for (std::size_t i = from; i < s.size(); ++i) {
            bool ok = true;
            for (Vertex c : chosen)
                if (!g.has_edge(c, s[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(s[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

inline std::uint64_t induced_edge_count(const Graph& g, const std::vector<Vertex>& s)
{
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) ++e;
    return e;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t r)
{
    if (r > n) return 0;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
}

} // namespace turan::testing

#endif // TURAN_TESTS_FIXTURES_HPP
