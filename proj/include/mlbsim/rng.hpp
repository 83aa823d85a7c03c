#ifndef MLBSIM_RNG_HPP
#define MLBSIM_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace mlbsim
{

/// Derives an independent substream seed from a master seed, a stream name
/// and an index. Streams are keyed by name so adding a new consumer never
/// shifts the draws of existing ones.
uint64_t DeriveSeed(uint64_t masterSeed, std::string_view streamName, uint64_t index);

/// Seeded random stream with portable draw semantics. All distributions are
/// generated from raw mt19937_64 output, so identical seeds give identical
/// sequences on every platform and standard library.
class RngStream
{
  public:
    RngStream(uint64_t masterSeed, std::string_view streamName, uint64_t index)
        : m_engine(DeriveSeed(masterSeed, streamName, index))
    {
    }

    /// Uniform double in [0, 1).
    double UniformDouble()
    {
        return static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double UniformDouble(double lo, double hi)
    {
        return lo + (hi - lo) * UniformDouble();
    }

    /// Normal draw via Box-Muller.
    double NormalDouble(double mean, double stddev);

  private:
    std::mt19937_64 m_engine;
};

} // namespace mlbsim

#endif // MLBSIM_RNG_HPP
