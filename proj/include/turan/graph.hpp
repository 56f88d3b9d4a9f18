#ifndef TURAN_GRAPH_HPP
#define TURAN_GRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <istream>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turan
{

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex IDs of some parent graph.
using VertexSet = std::vector<Vertex>;

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Every undirected edge appears in both endpoint lists; lists are sorted
/// ascending and contain neither self-loops nor duplicates.
class Graph
{
public:
    Graph() : offsets_(1, 0) {}

    /// Builds a graph on `n` vertices from an arbitrary edge list. Self-loops
    /// are dropped, direction is ignored and parallel edges are merged.
    static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
    {
        std::vector<std::uint64_t> degree(n, 0);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw std::out_of_range("edge endpoint exceeds vertex count");
            if (u == v) continue;
            ++degree[u];
            ++degree[v];
        }

        Graph g;
        g.offsets_.assign(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
        g.neighbors_.resize(g.offsets_[n]);

        std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (auto [u, v] : edges) {
            if (u == v) continue;
            g.neighbors_[cursor[u]++] = v;
            g.neighbors_[cursor[v]++] = u;
        }

        // sort and dedup each list, then compact in place
        std::uint64_t write = 0;
        std::uint64_t begin = 0;
        for (std::size_t v = 0; v < n; ++v) {
            const std::uint64_t end = g.offsets_[v + 1];
            auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(begin);
            auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(end);
            std::sort(first, last);
            last = std::unique(first, last);
            g.offsets_[v] = write;
            for (auto it = first; it != last; ++it) g.neighbors_[write++] = *it;
            begin = end;
        }
        g.offsets_[n] = write;
        g.neighbors_.resize(write);
        g.neighbors_.shrink_to_fit();
        return g;
    }

    std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
    std::uint64_t edge_count() const noexcept { return neighbors_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept
    {
        return {neighbors_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
    }

    std::size_t degree(Vertex v) const noexcept
    {
        return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
    }

    /// Binary search in the shorter of the two adjacency lists.
    bool has_edge(Vertex u, Vertex v) const noexcept
    {
        if (u == v) return false;
        if (degree(u) > degree(v)) std::swap(u, v);
        const auto list = neighbors(u);
        return std::binary_search(list.begin(), list.end(), v);
    }

    /// Identifier the vertex had in the input file; identity when no map was recorded.
    std::uint64_t original_id(Vertex v) const noexcept
    {
        return original_ids_.empty() ? v : original_ids_[v];
    }

    std::span<const std::uint64_t> original_ids() const noexcept { return original_ids_; }

    void set_original_ids(std::vector<std::uint64_t> ids)
    {
        if (ids.size() != vertex_count()) throw std::invalid_argument("original-ID map size mismatch");
        original_ids_ = std::move(ids);
    }

    /// Calls `fn(u, v)` once per undirected edge with u < v, in CSR order.
    template < typename Fn >
    void for_each_edge(Fn&& fn) const
    {
        for (Vertex u = 0; u < vertex_count(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v) fn(u, v);
    }

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<Vertex> neighbors_;
    std::vector<std::uint64_t> original_ids_;
};

// ---------------------------------------------------------------------------
// Edge-list ingestion

enum class DelimiterClass
{
    whitespace,          ///< spaces and tabs
    whitespace_or_comma, ///< spaces, tabs and ','
};

struct LoadOptions
{
    std::string comment_prefix = "#";
    DelimiterClass delimiters = DelimiterClass::whitespace;
};

namespace detail
{
inline bool is_delimiter(char c, DelimiterClass cls) noexcept
{
    if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') return true;
    return cls == DelimiterClass::whitespace_or_comma && c == ',';
}

inline std::string_view next_token(std::string_view& rest, DelimiterClass cls) noexcept
{
    std::size_t i = 0;
    while (i < rest.size() && is_delimiter(rest[i], cls)) ++i;
    std::size_t j = i;
    while (j < rest.size() && !is_delimiter(rest[j], cls)) ++j;
    auto tok = rest.substr(i, j - i);
    rest.remove_prefix(j);
    return tok;
}
} // namespace detail

/// Reads a text edge list: one "u v" pair per line, comment lines skipped.
/// Columns after the second are ignored. Vertex IDs are compacted to [0, n)
/// preserving numeric order, and the original IDs are kept on the graph.
inline Graph load_edge_list(std::istream& in, const LoadOptions& options = {})
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest = line;
        std::size_t lead = 0;
        while (lead < rest.size() && detail::is_delimiter(rest[lead], options.delimiters)) ++lead;
        rest.remove_prefix(lead);
        if (rest.empty()) continue;
        if (!options.comment_prefix.empty() && rest.starts_with(options.comment_prefix)) continue;

        std::uint64_t ends[2];
        for (int i = 0; i < 2; ++i) {
            const auto tok = detail::next_token(rest, options.delimiters);
            if (tok.empty()) throw ParseError(line_no, "expected two vertex IDs");
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), ends[i]);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError(line_no, "invalid vertex ID '" + std::string(tok) + "'");
        }
        raw.emplace_back(ends[0], ends[1]);
    }

    std::vector<std::uint64_t> ids;
    ids.reserve(raw.size() * 2);
    for (auto [u, v] : raw) {
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() > std::uint64_t{0xFFFFFFFFu}) throw std::length_error("too many vertices");

    auto dense = [&ids](std::uint64_t id) {
        return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.emplace_back(dense(u), dense(v));
    raw.clear();
    raw.shrink_to_fit();

    Graph g = Graph::from_edges(ids.size(), edges);
    g.set_original_ids(std::move(ids));
    return g;
}

// ---------------------------------------------------------------------------
// Degeneracy

/// Min-degree peeling order of a graph.
///
/// `deletion_degree[v]` is the degree of v among the vertices still present
/// when v is removed, which is also the size of its out-neighborhood in the
/// degeneracy DAG. `core_number[v]` is the usual k-core index (running maximum
/// of deletion degrees). Both maxima equal `alpha`.
struct DegeneracyOrder
{
    std::vector<Vertex> order;
    std::vector<Vertex> position;
    std::vector<std::uint32_t> deletion_degree;
    std::vector<std::uint32_t> core_number;
    std::uint32_t alpha = 0;

    bool precedes(Vertex u, Vertex v) const noexcept { return position[u] < position[v]; }
};

/// Repeatedly removes a minimum-degree vertex, ties going to the smallest ID.
inline DegeneracyOrder degeneracy_order(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    DegeneracyOrder d;
    d.order.reserve(n);
    d.position.assign(n, 0);
    d.deletion_degree.assign(n, 0);
    d.core_number.assign(n, 0);

    std::vector<std::uint32_t> degree(n);
    std::vector<bool> removed(n, false);
    using Key = std::pair<std::uint32_t, Vertex>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = static_cast<std::uint32_t>(g.degree(v));
        heap.emplace(degree[v], v);
    }

    std::uint32_t running = 0;
    while (!heap.empty()) {
        const auto [deg, v] = heap.top();
        heap.pop();
        if (removed[v] || deg != degree[v]) continue; // stale
        removed[v] = true;
        d.position[v] = static_cast<Vertex>(d.order.size());
        d.order.push_back(v);
        d.deletion_degree[v] = deg;
        running = std::max(running, deg);
        d.core_number[v] = running;
        for (Vertex u : g.neighbors(v)) {
            if (removed[u]) continue;
            --degree[u];
            heap.emplace(degree[u], u);
        }
    }
    d.alpha = running;
    return d;
}

/// Neighbors of v that come strictly later in the degeneracy order, sorted by ID.
inline VertexSet out_neighbors(const Graph& g, const DegeneracyOrder& d, Vertex v)
{
    VertexSet out;
    out.reserve(d.deletion_degree[v]);
    for (Vertex u : g.neighbors(v))
        if (d.precedes(v, u)) out.push_back(u);
    return out;
}

/// Induced subgraph together with the map from its local IDs to the parent's IDs.
struct InducedSubgraph
{
    Graph graph;
    VertexSet parent_ids; ///< parent_ids[local] = parent vertex

    Vertex to_parent(Vertex local) const noexcept { return parent_ids[local]; }
};

/// Builds G|_S by querying every pair of S against the edge oracle. Local IDs
/// follow the order of `s`, so a sorted `s` keeps ID order consistent.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return {Graph::from_edges(s.size(), edges), VertexSet(s.begin(), s.end())};
}

/// m / C(n,2); zero when n <= 1.
inline double edge_density(const Graph& g) noexcept
{
    const double n = static_cast<double>(g.vertex_count());
    if (n <= 1) return 0.0;
    return static_cast<double>(g.edge_count()) / (n * (n - 1) / 2.0);
}

} // namespace turan

#endif // TURAN_GRAPH_HPP
