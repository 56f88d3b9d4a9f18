#ifndef TURAN_BASELINE_HPP
#define TURAN_BASELINE_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "turan/graph.hpp"
#include "turan/oracle.hpp"
#include "turan/random.hpp"

namespace turan
{

struct BaselineReport
{
    int k = 0;
    double p = 1.0;
    double estimate = 0.0;
    std::uint64_t sampled_edges = 0;
    std::uint64_t sampled_count = 0; ///< exact k-cliques in the down-sampled graph
    std::chrono::duration<double, std::milli> elapsed{};
    std::uint64_t seed = 0;
};

/// Keeps each edge independently with probability p; edge e (in CSR order,
/// u < v) survives iff the stream keyed by (seed, e) says so.
inline Graph sparsify_edges(const Graph& g, double p, std::uint64_t seed)
{
    std::vector<std::pair<Vertex, Vertex>> kept;
    std::uint64_t index = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
        StreamRng rng(seed, index++);
        if (rng.unit() < p) kept.emplace_back(u, v);
    });
    return Graph::from_edges(g.vertex_count(), kept);
}

/// Edge-sampling estimator: count k-cliques in the sparsified graph exactly
/// and scale by p^-C(k,2).
inline BaselineReport edge_sampling_estimate(const Graph& g, int k, double p, std::uint64_t seed,
                                             unsigned threads = 1)
{
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("edge_sampling_estimate: p must lie in (0, 1]");
    if (k < 3) throw std::invalid_argument("edge_sampling_estimate: k must be >= 3");
    const auto start = std::chrono::steady_clock::now();
    const Graph sampled = sparsify_edges(g, p, seed);
    ExactOptions opts;
    opts.threads = threads;
    const ExactCount exact = exact_kclique_count(sampled, k, opts);

    BaselineReport rep;
    rep.k = k;
    rep.p = p;
    rep.seed = seed;
    rep.sampled_edges = sampled.edge_count();
    rep.sampled_count = exact.count;
    const double pairs = static_cast<double>(k) * (k - 1) / 2.0;
    rep.estimate = static_cast<double>(exact.count) / std::pow(p, pairs);
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
}

} // namespace turan

#endif // TURAN_BASELINE_HPP
