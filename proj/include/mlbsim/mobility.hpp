#ifndef MLBSIM_MOBILITY_HPP
#define MLBSIM_MOBILITY_HPP

#include "mlbsim/geometry.hpp"
#include "mlbsim/radio-model.hpp"
#include "mlbsim/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mlbsim
{

/// One mobile terminal. Speed is constant for the whole run.
struct UeState
{
    int ueId = 0;
    Vec2 position;
    double headingRad = 0.0;  ///< in [0, 2*pi)
    double speedMps = 16.6667;
    int servingSector = -1;
};

/// Per-UE random stream for the initial placement. Every mobility draw for
/// UE i comes from a stream of its own, so UEs can step in any order (or in
/// parallel) without changing the trajectories.
inline RngStream MobilityStream(uint64_t masterSeed, int ueId)
{
    return RngStream(masterSeed, "mobility", static_cast<uint64_t>(ueId));
}

/// Per-UE stream feeding the periodic heading redraws, independent of the
/// placement stream.
inline RngStream HeadingStream(uint64_t masterSeed, int ueId)
{
    return RngStream(masterSeed, "heading", static_cast<uint64_t>(ueId));
}

/// Places `count` UEs uniformly over the region with uniform headings,
/// deterministically from the master seed. Serving sectors are left
/// unattached (-1); see AttachStrongestSector.
/// Throws std::invalid_argument when count < 1 or the region is degenerate.
std::vector<UeState> InitUes(int count, const Region& region, double speedMps, uint64_t masterSeed);

/// Attaches every UE to its strongest-RSRP sector.
void AttachStrongestSector(std::span<UeState> ues,
                           std::span<const SectorConfig> sectors,
                           const PathLossParams& params,
                           const ShadowingMap& shadowing);

/// Advances one UE by speed * dt along its heading, reflecting at the region
/// boundary (angle of incidence = angle of reflection). The returned position
/// is always inside the region. Throws std::invalid_argument when dt <= 0.
UeState StepUe(const UeState& ue, double dtS, const Region& region);

/// Draws a fresh uniform heading in [0, 2*pi) from the UE's stream.
void RedrawHeading(UeState& ue, RngStream& stream);

} // namespace mlbsim

#endif // MLBSIM_MOBILITY_HPP
