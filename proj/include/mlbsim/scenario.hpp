#ifndef MLBSIM_SCENARIO_HPP
#define MLBSIM_SCENARIO_HPP

#include "mlbsim/handover.hpp"
#include "mlbsim/mlb.hpp"
#include "mlbsim/radio-model.hpp"
#include "mlbsim/scheduler.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mlbsim
{

struct TrafficParams
{
    double offeredRateBps = 2e6;  ///< constant downlink load per UE
};

struct MobilityParams
{
    double speedMps = 16.6667;  ///< 60 km/h
    double headingRedrawIntervalS = 10.0;
    double regionMarginM = 250.0;
};

/// Full description of a run. Defaults reproduce the 3-site / 9-sector
/// 5 MHz scenario: 500 m inter-site distance, 46 dBm, hysteresis 3 dB,
/// TTT 256 ms, thresholds 0.2 / 0.3 / 0.4.
struct ScenarioConfig
{
    std::string name = "default";
    double durationS = 100.0;
    double tickS = 0.01;
    double mlbPeriodS = 0.2;
    double interSiteDistanceM = 500.0;
    int siteCount = 3;
    int sectorsPerSite = 3;
    int totalPrbs = 25;
    int ueCount = 37;
    uint64_t seed = 1;
    Algorithm algorithm = Algorithm::None;
    BetaVariant betaVariant = BetaVariant::Literal;
    double txPowerDbm = 46.0;
    MlbThresholds thresholds;
    HandoverParams handover;
    PathLossParams radio;
    McsThresholds mcs;
    TrafficParams traffic;
    MobilityParams mobility;

    int SectorCount() const { return siteCount * sectorsPerSite; }

    /// Throws std::invalid_argument naming the offending key.
    void Validate() const;
};

/// Sites on the vertices of an equilateral triangle with the configured
/// side, three sectors each with boresights 120 degrees apart.
/// Sector id = site * sectorsPerSite + k.
std::vector<SectorConfig> BuildSectors(const ScenarioConfig& config);

/// Rectangle enclosing all sites with the configured margin on each side.
Region BuildRegion(const ScenarioConfig& config);

/// Parses a JSON config document. Keys mirror ScenarioConfig; all keys are
/// optional and default to the Table-2 scenario; unknown keys are rejected
/// with a diagnostic naming the key.
ScenarioConfig ConfigFromJsonText(const std::string& jsonText);
ScenarioConfig LoadConfigFile(const std::string& path);
std::string ConfigToJsonText(const ScenarioConfig& config);

} // namespace mlbsim

#endif // MLBSIM_SCENARIO_HPP
