#include "mlbsim/mobility.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mlbsim
{

std::vector<UeState> InitUes(int count, const Region& region, double speedMps, uint64_t masterSeed)
{
    if (count < 1)
    {
        throw std::invalid_argument("init_ues: count must be >= 1");
    }
    if (!region.IsValid())
    {
        throw std::invalid_argument("init_ues: region must have positive width and height");
    }
    std::vector<UeState> ues;
    ues.reserve(count);
    for (int i = 0; i < count; ++i)
    {
        RngStream stream = MobilityStream(masterSeed, i);
        UeState ue;
        ue.ueId = i;
        ue.position.x = stream.UniformDouble(region.minX, region.maxX);
        ue.position.y = stream.UniformDouble(region.minY, region.maxY);
        ue.headingRad = stream.UniformDouble(0.0, 2.0 * kPi);
        ue.speedMps = speedMps;
        ues.push_back(ue);
    }
    return ues;
}

void AttachStrongestSector(std::span<UeState> ues,
                           std::span<const SectorConfig> sectors,
                           const PathLossParams& params,
                           const ShadowingMap& shadowing)
{
    for (UeState& ue : ues)
    {
        ue.servingSector = StrongestSector(sectors, ue.position, params, shadowing, ue.ueId);
    }
}

UeState StepUe(const UeState& ue, double dtS, const Region& region)
{
    if (dtS <= 0.0)
    {
        throw std::invalid_argument("step: dt must be > 0");
    }
    UeState next = ue;
    double remaining = ue.speedMps * dtS;
    // At most a few reflections can occur in one tick; the cap only guards
    // against degenerate regions smaller than one step.
    for (int bounce = 0; bounce < 16 && remaining > 0.0; ++bounce)
    {
        double dirX = std::cos(next.headingRad);
        double dirY = std::sin(next.headingRad);

        double distX = std::numeric_limits<double>::infinity();
        if (dirX > 0.0)
        {
            distX = (region.maxX - next.position.x) / dirX;
        }
        else if (dirX < 0.0)
        {
            distX = (region.minX - next.position.x) / dirX;
        }
        double distY = std::numeric_limits<double>::infinity();
        if (dirY > 0.0)
        {
            distY = (region.maxY - next.position.y) / dirY;
        }
        else if (dirY < 0.0)
        {
            distY = (region.minY - next.position.y) / dirY;
        }
        distX = std::max(distX, 0.0);
        distY = std::max(distY, 0.0);

        double toWall = std::min(distX, distY);
        if (remaining <= toWall)
        {
            next.position.x += dirX * remaining;
            next.position.y += dirY * remaining;
            remaining = 0.0;
            break;
        }

        next.position.x += dirX * toWall;
        next.position.y += dirY * toWall;
        remaining -= toWall;
        // Mirror the heading on the wall(s) hit; a corner flips both axes.
        if (distX <= distY)
        {
            next.headingRad = kPi - next.headingRad;
        }
        if (distY <= distX)
        {
            next.headingRad = -next.headingRad;
        }
        next.headingRad = WrapRadians(next.headingRad);
        next.position = region.Clamp(next.position);
    }
    next.position = region.Clamp(next.position);
    return next;
}

void RedrawHeading(UeState& ue, RngStream& stream)
{
    ue.headingRad = stream.UniformDouble(0.0, 2.0 * kPi);
}

} // namespace mlbsim
