#ifndef MLBSIM_RADIO_MODEL_HPP
#define MLBSIM_RADIO_MODEL_HPP

#include "mlbsim/geometry.hpp"

#include <span>
#include <vector>

namespace mlbsim
{

/// One directional cell of an eNodeB site.
struct SectorConfig
{
    int sectorId = 0;
    Vec2 sitePosition;
    double azimuthDeg = 0.0;  ///< boresight, degrees counterclockwise from +x, in [0, 360)
    double txPowerDbm = 46.0;
    int totalPrbs = 25;
};

/// Log-distance propagation constants plus the receiver noise floor.
struct PathLossParams
{
    double referenceLossDb = 34.5;
    double exponent = 3.5;
    double referenceDistanceM = 1.0;
    double shadowingStddevDb = 0.0;
    double noiseFloorDbm = -98.0;  ///< thermal noise over 5 MHz + 9 dB UE noise figure
};

/// Per-UE downlink measurement for one tick: RSRP toward every sector plus
/// the SINR on the serving sector.
struct Measurement
{
    int ueId = 0;
    std::vector<double> rsrpDbm;  ///< indexed by sectorId
    double servingSinrDb = 0.0;
    double timestampS = 0.0;
};

/// Frozen per-(sector, UE) shadowing samples for a whole run. Empty when
/// shadowing is disabled.
class ShadowingMap
{
  public:
    ShadowingMap() = default;
    ShadowingMap(int sectorCount, int ueCount, double stddevDb, uint64_t masterSeed);

    double Get(int sectorId, int ueId) const
    {
        if (m_values.empty())
        {
            return 0.0;
        }
        return m_values[static_cast<size_t>(sectorId) * m_ueCount + ueId];
    }

    bool Enabled() const { return !m_values.empty(); }

  private:
    size_t m_ueCount = 0;
    std::vector<double> m_values;
};

double DbmToMw(double dbm);
double MwToDbm(double mw);

/// Log-distance path loss. Distances below the reference distance are
/// clamped to it. Throws std::invalid_argument on a non-finite distance.
double PathLossDb(double distanceM, const PathLossParams& params, double shadowingDb = 0.0);

/// Parabolic 3-sector pattern: -min(12 * (offset / 65)^2, 20) dB.
/// The offset is normalized to (-180, 180] internally.
double AntennaGainDb(double bearingOffsetDeg);

/// Bearing from the sector site to the UE, relative to the sector boresight,
/// normalized to (-180, 180].
double BearingOffsetDeg(const SectorConfig& sector, const Vec2& uePosition);

double RsrpDbm(const SectorConfig& sector,
               const Vec2& uePosition,
               const PathLossParams& params,
               double shadowingDb = 0.0);

/// SINR of the serving sector with co-channel interference from every other
/// sector. shadowingDb, when nonempty, carries one sample per sector.
double SinrDb(const SectorConfig& serving,
              std::span<const SectorConfig> allSectors,
              const Vec2& uePosition,
              const PathLossParams& params,
              std::span<const double> shadowingDb = {});

/// Same SINR computed from an already-measured per-sector RSRP vector.
double SinrFromRsrpDbm(std::span<const double> rsrpDbm, int servingSector, double noiseFloorDbm);

/// Full per-sector measurement for one UE.
Measurement Measure(int ueId,
                    int servingSector,
                    std::span<const SectorConfig> sectors,
                    const Vec2& uePosition,
                    const PathLossParams& params,
                    const ShadowingMap& shadowing,
                    double timestampS);

/// Index of the strongest-RSRP sector at a position.
int StrongestSector(std::span<const SectorConfig> sectors,
                    const Vec2& uePosition,
                    const PathLossParams& params,
                    const ShadowingMap& shadowing,
                    int ueId);

} // namespace mlbsim

#endif // MLBSIM_RADIO_MODEL_HPP
