#ifndef TURAN_RANDOM_HPP
#define TURAN_RANDOM_HPP

#include <cstdint>

namespace turan
{

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// SplitMix64 stream keyed by (seed, index). Streams for distinct indices are
/// independent, which makes per-trial randomness independent of scheduling.
class StreamRng
{
public:
    using result_type = std::uint64_t;

    constexpr StreamRng(std::uint64_t seed, std::uint64_t index) noexcept
        : state_(splitmix64_mix(seed ^ splitmix64_mix(index + 0x632be59bd9b4e019ULL)))
    {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    constexpr result_type operator()() noexcept
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64_mix(state_);
    }

    /// Uniform in [0, bound) by Lemire's multiply-and-reject.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept
    {
        using wide = unsigned __int128;
        wide prod = static_cast<wide>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(prod);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                prod = static_cast<wide>((*this)()) * bound;
                low = static_cast<std::uint64_t>(prod);
            }
        }
        return static_cast<std::uint64_t>(prod >> 64);
    }

    /// Uniform in [0, 1) with 53 random bits.
    constexpr double unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace turan

#endif // TURAN_RANDOM_HPP
