#ifndef TURAN_ORACLE_HPP
#define TURAN_ORACLE_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "turan/graph.hpp"

namespace turan
{

class OverflowError : public std::overflow_error
{
public:
    using std::overflow_error::overflow_error;
};

class TimeBudgetExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct ExactCount
{
    int k = 0;
    std::uint64_t count = 0;
    std::chrono::duration<double> elapsed{};
};

struct ExactOptions
{
    unsigned threads = 1;
    /// Checked between top-level vertices; exceeding it throws TimeBudgetExceeded.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

namespace detail
{

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("k-clique count exceeds 64 bits");
    return r;
}

inline std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) noexcept
{
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else ++n, ++i, ++j;
    }
    return n;
}

/// Degeneracy DAG in CSR form: out-lists sorted by vertex ID.
struct OutGraph
{
    std::vector<std::uint64_t> offsets;
    std::vector<Vertex> targets;

    explicit OutGraph(const Graph& g)
    {
        const DegeneracyOrder d = degeneracy_order(g);
        const std::size_t n = g.vertex_count();
        offsets.assign(n + 1, 0);
        for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + d.deletion_degree[v];
        targets.reserve(offsets[n]);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex u : g.neighbors(v))
                if (d.precedes(v, u)) targets.push_back(u);
    }

    std::span<const Vertex> out(Vertex v) const noexcept
    {
        return {targets.data() + offsets[v], static_cast<std::size_t>(offsets[v + 1] - offsets[v])};
    }
};

class CliqueCounter
{
public:
    CliqueCounter(const OutGraph& dag, int k) : dag_(dag), levels_(static_cast<std::size_t>(std::max(k, 1)))
    {}

    /// Number of `need`-cliques inside `candidates`, all of whose members are
    /// common out-neighbors of the vertices chosen so far.
    std::uint64_t count(std::span<const Vertex> candidates, int need, int depth)
    {
        if (need == 1) return candidates.size();
        if (candidates.size() < static_cast<std::size_t>(need)) return 0;
        std::uint64_t total = 0;
        if (need == 2) {
            for (Vertex v : candidates) total = checked_add(total, intersection_size(candidates, dag_.out(v)));
            return total;
        }
        auto& next = levels_[static_cast<std::size_t>(depth)];
        for (Vertex v : candidates) {
            const auto out = dag_.out(v);
            if (out.size() < static_cast<std::size_t>(need - 1)) continue;
            next.clear();
            std::set_intersection(candidates.begin(), candidates.end(), out.begin(), out.end(),
                                  std::back_inserter(next));
            total = checked_add(total, count(next, need - 1, depth + 1));
        }
        return total;
    }

private:
    const OutGraph& dag_;
    std::vector<std::vector<Vertex>> levels_;
};

} // namespace detail

/// Exact k-clique count: for every vertex, recursively count (k-1)-cliques in
/// its degeneracy-DAG out-neighborhood by sorted-list intersection.
/// Throws OverflowError rather than wrapping.
inline ExactCount exact_kclique_count(const Graph& g, int k, const ExactOptions& options = {})
{
    if (k < 1) throw std::invalid_argument("exact_kclique_count: k must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    ExactCount result{k, 0, {}};
    if (k == 1) {
        result.count = g.vertex_count();
    } else if (k == 2) {
        result.count = g.edge_count();
    } else {
        const detail::OutGraph dag(g);
        const std::size_t n = g.vertex_count();
        const unsigned threads = std::max(1u, options.threads);
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::exception_ptr> errors(threads);
        std::atomic<bool> stop{false};

        auto work = [&](unsigned tid) {
            try {
                detail::CliqueCounter counter(dag, k);
                std::size_t iter = 0;
                for (std::size_t v = tid; v < n && !stop.load(std::memory_order_relaxed); v += threads) {
                    if (options.deadline && iter++ % 64 == 0
                        && std::chrono::steady_clock::now() > *options.deadline)
                        throw TimeBudgetExceeded("exact count exceeded its time budget");
                    partial[tid] = detail::checked_add(
                        partial[tid], counter.count(dag.out(static_cast<Vertex>(v)), k - 1, 0));
                }
            } catch (...) {
                errors[tid] = std::current_exception();
                stop = true;
            }
        };

        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto p : partial) result.count = detail::checked_add(result.count, p);
    }
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

class RefusalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Enumerates every k-subset and tests all pairs. Test-only ground truth;
/// refuses instances with more than 1e8 subsets.
inline ExactCount naive_kclique_count(const Graph& g, int k)
{
    if (k < 1) throw std::invalid_argument("naive_kclique_count: k must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = g.vertex_count();
    ExactCount result{k, 0, {}};
    if (static_cast<std::size_t>(k) > n) return result;

    double subsets = 1;
    for (int i = 0; i < k; ++i) subsets = subsets * static_cast<double>(n - static_cast<std::size_t>(i)) / (i + 1);
    if (subsets > 1e8) throw RefusalError("naive_kclique_count: too many subsets");

    std::vector<std::uint8_t> adj(n * n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) adj[u * n + v] = g.has_edge(u, v) ? 1 : 0;

    std::vector<std::size_t> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    const auto kk = static_cast<std::size_t>(k);
    for (;;) {
        bool clique = true;
        for (std::size_t i = 0; i < kk && clique; ++i)
            for (std::size_t j = i + 1; j < kk && clique; ++j) clique = adj[pick[i] * n + pick[j]] != 0;
        if (clique) ++result.count;

        // next combination in lexicographic order
        std::size_t i = kk;
        while (i > 0 && pick[i - 1] == n - kk + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < kk; ++j) pick[j] = pick[j - 1] + 1;
    }
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

} // namespace turan

#endif // TURAN_ORACLE_HPP
