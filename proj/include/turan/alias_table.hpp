#ifndef TURAN_ALIAS_TABLE_HPP
#define TURAN_ALIAS_TABLE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace turan
{

/// Walker/Vose alias table over a fixed list of positive weights.
class AliasTable
{
public:
    AliasTable() = default;

    explicit AliasTable(std::span<const double> weights)
    {
        const std::size_t n = weights.size();
        if (n == 0) return;
        double total = 0;
        for (double w : weights) {
            if (!(w > 0)) throw std::invalid_argument("alias table weights must be positive");
            total += w;
        }

        prob_.resize(n);
        alias_.resize(n);
        std::vector<double> scaled(n);
        std::vector<std::uint32_t> small, large;
        for (std::size_t i = 0; i < n; ++i) {
            scaled[i] = weights[i] * static_cast<double>(n) / total;
            (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
        }
        while (!small.empty() && !large.empty()) {
            const auto s = small.back();
            small.pop_back();
            const auto l = large.back();
            prob_[s] = scaled[s];
            alias_[s] = l;
            scaled[l] = (scaled[l] + scaled[s]) - 1.0;
            if (scaled[l] < 1.0) {
                large.pop_back();
                small.push_back(l);
            }
        }
        // leftovers are 1 up to rounding
        for (auto i : large) prob_[i] = 1.0, alias_[i] = i;
        for (auto i : small) prob_[i] = 1.0, alias_[i] = i;
    }

    std::size_t size() const noexcept { return prob_.size(); }
    bool empty() const noexcept { return prob_.empty(); }

    template < typename Rng >
    std::size_t draw(Rng& rng) const noexcept
    {
        const auto column = static_cast<std::size_t>(rng.below(prob_.size()));
        return rng.unit() < prob_[column] ? column : alias_[column];
    }

    /// Exact draw probability of each outcome implied by the table.
    std::vector<double> probabilities() const
    {
        const std::size_t n = prob_.size();
        std::vector<double> p(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] += prob_[i] / static_cast<double>(n);
            p[alias_[i]] += (1.0 - prob_[i]) / static_cast<double>(n);
        }
        return p;
    }

private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
};

} // namespace turan

#endif // TURAN_ALIAS_TABLE_HPP
