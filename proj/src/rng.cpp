#include "mlbsim/rng.hpp"

#include "mlbsim/geometry.hpp"

#include <cmath>

namespace mlbsim
{

namespace
{

uint64_t Fnv1a64(std::string_view s)
{
    uint64_t h = 1469598103934665603ull;
    for (char c : s)
    {
        h ^= static_cast<uint64_t>(static_cast<unsigned char>(c));
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t SplitMix64(uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace

uint64_t DeriveSeed(uint64_t masterSeed, std::string_view streamName, uint64_t index)
{
    uint64_t s = SplitMix64(masterSeed ^ Fnv1a64(streamName));
    return SplitMix64(s ^ (index + 1) * 0x9E3779B97F4A7C15ull);
}

double RngStream::NormalDouble(double mean, double stddev)
{
    // u1 in (0, 1] so the log is finite.
    double u1 = 1.0 - UniformDouble();
    double u2 = UniformDouble();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * kPi * u2);
}

} // namespace mlbsim
