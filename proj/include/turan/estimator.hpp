#ifndef TURAN_ESTIMATOR_HPP
#define TURAN_ESTIMATOR_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

#include "turan/alias_table.hpp"
#include "turan/graph.hpp"
#include "turan/random.hpp"
#include "turan/shadow.hpp"

namespace turan
{

inline constexpr std::uint64_t default_samples = 50000;

/// f(ell) = ell^(ell-2) / ell!, the constant of the quantitative Erdős bound.
inline double f_of(int ell)
{
    if (ell < 3 || ell > max_clique_size) throw std::invalid_argument("f_of: ell must lie in [3, 64]");
    double f = 1.0;
    for (int i = 1; i <= ell; ++i) f *= static_cast<double>(ell) / i;
    return f / (static_cast<double>(ell) * ell);
}

/// C(n, r) as a double, by iterated multiply-divide.
inline double binomial(std::uint64_t n, std::uint64_t r) noexcept
{
    if (r > n) return 0.0;
    r = std::min(r, n - r);
    double c = 1.0;
    for (std::uint64_t i = 1; i <= r; ++i) c = c * static_cast<double>(n - r + i) / static_cast<double>(i);
    return c < 0x1.0p53 ? std::round(c) : c;
}

/// gamma = 1 / max over entries with ell >= 3 of f(ell) |S|^2; 1 when no such entry.
inline double gamma_of(const TuranShadow& sh)
{
    double worst = 0.0;
    for (const auto& e : sh.entries) {
        if (e.ell < 3) continue;
        const double size = static_cast<double>(e.vertices.size());
        worst = std::max(worst, f_of(e.ell) * size * size);
    }
    return worst > 0.0 ? 1.0 / worst : 1.0;
}

/// t = ceil(20 / (gamma eps^2) * ln(1/delta)).
inline std::uint64_t required_samples(double gamma, double eps, double delta)
{
    if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("required_samples: gamma must lie in (0, 1]");
    if (!(eps > 0.0)) throw std::invalid_argument("required_samples: eps must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("required_samples: delta must lie in (0, 1)");
    const double t = std::ceil(20.0 / (gamma * eps * eps) * std::log(1.0 / delta));
    if (!(t < 0x1.0p63)) throw std::overflow_error("required_samples: sample count overflows");
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(t));
}

/// Weighted distribution over the sampled part of a shadow.
///
/// Entries with ell <= 2 carry no density guarantee and are counted exactly
/// into `exact_offset` instead of being sampled.
struct SamplerState
{
    std::vector<const ShadowEntry*> sampled_entries;
    std::vector<double> weights; ///< C(|S|, ell) per sampled entry
    double total_weight = 0.0;
    AliasTable alias;
    std::uint64_t exact_offset = 0;
    std::size_t max_set_size = 0;

    bool has_sampled_entries() const noexcept { return !sampled_entries.empty(); }
};

/// The shadow must outlive the returned state.
inline SamplerState build_sampler(const TuranShadow& sh, const Graph& g)
{
    SamplerState st;
    for (const auto& e : sh.entries) {
        const auto size = e.vertices.size();
        if (size < static_cast<std::size_t>(std::max(e.ell, 1))) continue;
        if (e.ell <= 1) {
            st.exact_offset += size;
        } else if (e.ell == 2) {
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = i + 1; j < size; ++j)
                    if (g.has_edge(e.vertices[i], e.vertices[j])) ++st.exact_offset;
        } else {
            st.sampled_entries.push_back(&e);
            st.weights.push_back(binomial(size, static_cast<std::uint64_t>(e.ell)));
            st.max_set_size = std::max(st.max_set_size, size);
        }
    }
    // sequential left fold keeps W bit-identical across runs
    st.total_weight = std::accumulate(st.weights.begin(), st.weights.end(), 0.0);
    st.alias = AliasTable(st.weights);
    return st;
}

struct TrialOutcome
{
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
};

namespace detail
{

/// Per-thread scratch for drawing uniform ell-subsets by partial Fisher-Yates.
class SubsetDrawer
{
public:
    explicit SubsetDrawer(std::size_t capacity) : index_(capacity)
    {
        std::iota(index_.begin(), index_.end(), std::uint32_t{0});
    }

    /// Fills `out` with a uniform ell-subset of `set`, sorted ascending.
    void draw(std::span<const Vertex> set, int ell, StreamRng& rng, std::vector<Vertex>& out)
    {
        const auto size = static_cast<std::uint32_t>(set.size());
        const auto count = static_cast<std::uint32_t>(ell);
        swaps_.clear();
        out.clear();
        for (std::uint32_t i = 0; i < count; ++i) {
            const auto j = i + static_cast<std::uint32_t>(rng.below(size - i));
            std::swap(index_[i], index_[j]);
            swaps_.push_back(j);
            out.push_back(set[index_[i]]);
        }
        // undo in reverse so the index array is the identity again
        for (std::uint32_t i = count; i-- > 0;) std::swap(index_[i], index_[swaps_[i]]);
        std::sort(out.begin(), out.end());
    }

private:
    std::vector<std::uint32_t> index_;
    std::vector<std::uint32_t> swaps_;
};

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) noexcept
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

inline std::uint64_t run_trial_range(const SamplerState& st, const Graph& g, std::uint64_t first,
                                     std::uint64_t last, std::uint64_t seed)
{
    SubsetDrawer drawer(st.max_set_size);
    std::vector<Vertex> picked;
    std::uint64_t successes = 0;
    for (std::uint64_t r = first; r < last; ++r) {
        StreamRng rng(seed, r);
        const ShadowEntry& e = *st.sampled_entries[st.alias.draw(rng)];
        drawer.draw(e.vertices, e.ell, rng, picked);
        if (is_clique(g, picked)) ++successes;
    }
    return successes;
}

} // namespace detail

/// Runs t independent trials: pick an entry with probability w(S)/W, pick a
/// uniform ell-subset of it and test whether it is a clique. Trial r draws
/// only from the stream keyed by (seed, r), so the result does not depend on
/// the thread count.
inline TrialOutcome run_trials(const SamplerState& st, const Graph& g, std::uint64_t t, std::uint64_t seed,
                               unsigned threads = 1)
{
    if (!st.has_sampled_entries() || t == 0) return {0, t};
    threads = std::max(1u, threads);
    if (threads == 1 || t < threads) return {detail::run_trial_range(st, g, 0, t, seed), t};

    std::vector<std::uint64_t> partial(threads, 0);
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) {
            const std::uint64_t first = t * i / threads;
            const std::uint64_t last = t * (i + 1) / threads;
            pool.emplace_back([&, i, first, last] { partial[i] = detail::run_trial_range(st, g, first, last, seed); });
        }
    }
    return {std::accumulate(partial.begin(), partial.end(), std::uint64_t{0}), t};
}

/// (successes / t) W + exact_offset.
inline double estimate_from_trials(const SamplerState& st, std::uint64_t successes, std::uint64_t t)
{
    const double offset = static_cast<double>(st.exact_offset);
    if (!st.has_sampled_entries() || t == 0) return offset;
    return static_cast<double>(successes) / static_cast<double>(t) * st.total_weight + offset;
}

struct FixedSamples
{
    std::uint64_t t = default_samples;
};

struct ErrorBounds
{
    double eps = 0.1;
    double delta = 0.1;
};

using SamplingMode = std::variant<FixedSamples, ErrorBounds>;

struct EstimateReport
{
    int k = 0;
    double estimate = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t successes = 0;
    double success_ratio = 0.0;
    double gamma = 1.0;
    double total_weight = 0.0;
    std::uint64_t exact_offset = 0;
    std::size_t shadow_set_count = 0;
    std::uint64_t representation_size = 0;
    std::chrono::duration<double, std::milli> time_shadow{};
    std::chrono::duration<double, std::milli> time_sample{};
    std::uint64_t seed = 0;
};

/// Number of trials a sampling mode asks for at a given gamma.
inline std::uint64_t trials_for(const SamplingMode& mode, double gamma)
{
    if (const auto* fixed = std::get_if<FixedSamples>(&mode)) return fixed->t;
    const auto& bounds = std::get<ErrorBounds>(mode);
    return required_samples(gamma, bounds.eps, bounds.delta);
}

/// Samples an already built shadow and fills in everything but time_shadow.
inline EstimateReport sample_shadow(const TuranShadow& sh, const Graph& g, const SamplingMode& mode,
                                    std::uint64_t seed, unsigned threads = 1)
{
    const auto start = std::chrono::steady_clock::now();
    EstimateReport rep;
    rep.k = sh.k;
    rep.seed = seed;
    rep.shadow_set_count = sh.entries.size();
    rep.representation_size = sh.representation_size;
    rep.gamma = gamma_of(sh);

    const SamplerState st = build_sampler(sh, g);
    rep.total_weight = st.total_weight;
    rep.exact_offset = st.exact_offset;
    rep.samples = trials_for(mode, rep.gamma);
    const TrialOutcome outcome = run_trials(st, g, rep.samples, seed, threads);
    rep.successes = outcome.successes;
    rep.success_ratio =
        rep.samples > 0 ? static_cast<double>(outcome.successes) / static_cast<double>(rep.samples) : 0.0;
    rep.estimate = estimate_from_trials(st, outcome.successes, rep.samples);
    rep.time_sample = std::chrono::steady_clock::now() - start;
    return rep;
}

/// End-to-end estimate of the number of k-cliques. k = 1 and k = 2 are
/// answered exactly (n and m) without building a shadow.
inline EstimateReport turan_shadow_count(const Graph& g, int k, const SamplingMode& mode = FixedSamples{},
                                         std::uint64_t seed = 0, unsigned threads = 1)
{
    if (k < 1 || k > max_clique_size) throw std::invalid_argument("turan_shadow_count: k must lie in [1, 64]");
    if (k <= 2) {
        EstimateReport rep;
        rep.k = k;
        rep.seed = seed;
        rep.exact_offset = k == 1 ? g.vertex_count() : g.edge_count();
        rep.estimate = static_cast<double>(rep.exact_offset);
        return rep;
    }
    const auto start = std::chrono::steady_clock::now();
    const TuranShadow sh = shadow_finder(g, k);
    const auto shadow_time = std::chrono::steady_clock::now() - start;
    EstimateReport rep = sample_shadow(sh, g, mode, seed, threads);
    rep.time_shadow = shadow_time;
    return rep;
}

} // namespace turan

#endif // TURAN_ESTIMATOR_HPP
