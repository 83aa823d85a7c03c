#include "mlbsim/radio-model.hpp"

#include "mlbsim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mlbsim
{

ShadowingMap::ShadowingMap(int sectorCount, int ueCount, double stddevDb, uint64_t masterSeed)
{
    if (stddevDb <= 0.0)
    {
        return;
    }
    m_ueCount = static_cast<size_t>(ueCount);
    m_values.resize(static_cast<size_t>(sectorCount) * ueCount);
    for (int s = 0; s < sectorCount; ++s)
    {
        for (int u = 0; u < ueCount; ++u)
        {
            RngStream stream(masterSeed, "shadowing", static_cast<uint64_t>(s) * ueCount + u);
            m_values[static_cast<size_t>(s) * ueCount + u] = stream.NormalDouble(0.0, stddevDb);
        }
    }
}

double DbmToMw(double dbm)
{
    return std::pow(10.0, dbm / 10.0);
}

double MwToDbm(double mw)
{
    return 10.0 * std::log10(mw);
}

double PathLossDb(double distanceM, const PathLossParams& params, double shadowingDb)
{
    if (!std::isfinite(distanceM))
    {
        throw std::invalid_argument("path_loss: distance must be finite");
    }
    double d = std::max(distanceM, params.referenceDistanceM);
    return params.referenceLossDb + 10.0 * params.exponent * std::log10(d / params.referenceDistanceM) +
           shadowingDb;
}

double AntennaGainDb(double bearingOffsetDeg)
{
    double offset = NormalizeAngleDeg(bearingOffsetDeg);
    double attenuation = 12.0 * (offset / 65.0) * (offset / 65.0);
    return -std::min(attenuation, 20.0);
}

double BearingOffsetDeg(const SectorConfig& sector, const Vec2& uePosition)
{
    Vec2 d = uePosition - sector.sitePosition;
    if (d.x == 0.0 && d.y == 0.0)
    {
        // Co-located with the site: boresight by convention.
        return 0.0;
    }
    double bearingDeg = RadToDeg(std::atan2(d.y, d.x));
    return NormalizeAngleDeg(bearingDeg - sector.azimuthDeg);
}

double RsrpDbm(const SectorConfig& sector,
               const Vec2& uePosition,
               const PathLossParams& params,
               double shadowingDb)
{
    double distance = (uePosition - sector.sitePosition).Norm();
    return sector.txPowerDbm + AntennaGainDb(BearingOffsetDeg(sector, uePosition)) -
           PathLossDb(distance, params, shadowingDb);
}

double SinrFromRsrpDbm(std::span<const double> rsrpDbm, int servingSector, double noiseFloorDbm)
{
    double signalMw = DbmToMw(rsrpDbm[servingSector]);
    double interferenceMw = 0.0;
    for (size_t s = 0; s < rsrpDbm.size(); ++s)
    {
        if (static_cast<int>(s) != servingSector)
        {
            interferenceMw += DbmToMw(rsrpDbm[s]);
        }
    }
    return MwToDbm(signalMw / (interferenceMw + DbmToMw(noiseFloorDbm)));
}

double SinrDb(const SectorConfig& serving,
              std::span<const SectorConfig> allSectors,
              const Vec2& uePosition,
              const PathLossParams& params,
              std::span<const double> shadowingDb)
{
    std::vector<double> rsrp(allSectors.size());
    int servingIndex = -1;
    for (size_t s = 0; s < allSectors.size(); ++s)
    {
        double shadow = shadowingDb.empty() ? 0.0 : shadowingDb[s];
        rsrp[s] = RsrpDbm(allSectors[s], uePosition, params, shadow);
        if (allSectors[s].sectorId == serving.sectorId)
        {
            servingIndex = static_cast<int>(s);
        }
    }
    if (servingIndex < 0)
    {
        throw std::invalid_argument("sinr: serving sector not in sector list");
    }
    return SinrFromRsrpDbm(rsrp, servingIndex, params.noiseFloorDbm);
}

Measurement Measure(int ueId,
                    int servingSector,
                    std::span<const SectorConfig> sectors,
                    const Vec2& uePosition,
                    const PathLossParams& params,
                    const ShadowingMap& shadowing,
                    double timestampS)
{
    Measurement m;
    m.ueId = ueId;
    m.timestampS = timestampS;
    m.rsrpDbm.resize(sectors.size());
    for (size_t s = 0; s < sectors.size(); ++s)
    {
        m.rsrpDbm[s] = RsrpDbm(sectors[s], uePosition, params, shadowing.Get(static_cast<int>(s), ueId));
    }
    m.servingSinrDb = SinrFromRsrpDbm(m.rsrpDbm, servingSector, params.noiseFloorDbm);
    return m;
}

int StrongestSector(std::span<const SectorConfig> sectors,
                    const Vec2& uePosition,
                    const PathLossParams& params,
                    const ShadowingMap& shadowing,
                    int ueId)
{
    int best = 0;
    double bestRsrp = -std::numeric_limits<double>::infinity();
    for (size_t s = 0; s < sectors.size(); ++s)
    {
        double r = RsrpDbm(sectors[s], uePosition, params, shadowing.Get(static_cast<int>(s), ueId));
        if (r > bestRsrp)
        {
            bestRsrp = r;
            best = static_cast<int>(s);
        }
    }
    return best;
}

} // namespace mlbsim
