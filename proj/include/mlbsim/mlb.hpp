#ifndef MLBSIM_MLB_HPP
#define MLBSIM_MLB_HPP

#include "mlbsim/handover.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mlbsim
{

enum class Algorithm
{
    None,
    Mlb1,
    Mlb2
};

/// Orientation of the Alg_MLB1 beta ramp over the middle availability band.
/// Literal follows the published formula (beta grows with availability);
/// Continuous reverses the slope so alpha is continuous at both band edges.
enum class BetaVariant
{
    Literal,
    Continuous
};

std::string ToString(Algorithm a);
std::string ToString(BetaVariant v);
Algorithm AlgorithmFromString(const std::string& s);
BetaVariant BetaVariantFromString(const std::string& s);

/// MLB trigger thresholds on the available-resource ratio V_AR / V_TR.
struct MlbThresholds
{
    double thPre = 0.2;    ///< below: the cell is overloaded, MLB activates
    double thAvail = 0.3;  ///< above: a neighbor accepts load
    double thPost = 0.4;   ///< above: MLB deactivates

    /// Throws std::invalid_argument unless 0 <= thPre < thAvail < thPost < 1.
    /// thPre = 0 is allowed and makes activation unreachable.
    void Validate() const;
};

/// PRB occupancy snapshot of one sector over an MLB period.
struct LoadReport
{
    int sectorId = 0;
    double vAr = 0.0;  ///< available PRBs (period average)
    double vTr = 0.0;  ///< total PRBs

    double Ratio() const { return vAr / vTr; }

    /// Throws std::invalid_argument unless 0 <= vAr <= vTr and vTr > 0.
    void Validate() const;
};

/// condition 1: the reporting cell is overloaded.
bool IsOverloaded(const LoadReport& report, const MlbThresholds& th);

/// condition 2: the reporting cell has recovered; MLB must disable.
bool ShouldDeactivate(const LoadReport& report, const MlbThresholds& th);

/// condition 3: the neighbor has enough spare resources to take load.
bool NeighborEligible(const LoadReport& report, const MlbThresholds& th);

/// Middle-band scaling factor. Mlb2 is the constant 0.5; Mlb1 ramps across
/// [thAvail, thPost] with the slope orientation picked by the variant.
/// Clamped to [0, 1].
double Beta(double ratio, const MlbThresholds& th, Algorithm algorithm, BetaVariant variant);

/// Per-neighbor hysteresis scaling: 0 above thPost, Beta inside
/// [thAvail, thPost], 1 below thAvail.
double Alpha(double ratio, const MlbThresholds& th, Algorithm algorithm, BetaVariant variant);

/// Nearest point on the 0.5 dB grid, ties toward zero.
double QuantizeHysteresisDb(double rawDb);

/// Effective hysteresis alpha * base, quantized to the 0.5 dB grid.
double EffectiveHysteresisDb(double baseDb, double alpha);

enum class MlbPhase
{
    Inactive,
    Active
};

std::string ToString(MlbPhase p);

/// Distributed per-sector controller state.
struct MlbState
{
    int sectorId = 0;
    MlbPhase phase = MlbPhase::Inactive;
    std::map<int, double> alphaByNeighbor;  ///< empty whenever inactive
    Algorithm algorithm = Algorithm::None;
    BetaVariant betaVariant = BetaVariant::Literal;
};

/// Hysteresis rewrite notification sent to the UEs attached to the sector.
struct MeasurementControlMessage
{
    int sectorId = 0;
    double timestampS = 0.0;
    std::vector<std::pair<int, double>> hysteresisByNeighbor;
};

/// One per-neighbor decision within an MLB period (for the decision log).
struct NeighborDecision
{
    int neighborSector = 0;
    double neighborRatio = -1.0;  ///< -1 when the report was missing
    double alpha = 1.0;
    double rawHysteresisDb = 0.0;
    double effectiveHysteresisDb = 0.0;
};

struct MlbTickResult
{
    bool activated = false;
    bool deactivated = false;
    bool tableChanged = false;
    std::vector<NeighborDecision> decisions;
    std::optional<MeasurementControlMessage> message;
};

/// Runs one MLB period for one sector: applies conditions 1 and 2 to the
/// sector's own report, recomputes per-neighbor alphas while active, rewrites
/// the sector's hysteresis row (Eq. 1) and restores the defaults on
/// deactivation. A control message is emitted only when at least one table
/// entry changed. Neighbors without a report count as ineligible (alpha 1).
MlbTickResult MlbTick(MlbState& state,
                      const LoadReport& ownReport,
                      std::span<const LoadReport> neighborReports,
                      const MlbThresholds& th,
                      double baseHysteresisDb,
                      HysteresisTable& table,
                      double nowS);

} // namespace mlbsim

#endif // MLBSIM_MLB_HPP
