#ifndef MLBSIM_HANDOVER_HPP
#define MLBSIM_HANDOVER_HPP

#include "mlbsim/mobility.hpp"
#include "mlbsim/radio-model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mlbsim
{

struct HandoverParams
{
    double defaultHysteresisDb = 3.0;
    double tttS = 0.256;
};

/// Effective per-(serving, neighbor) hysteresis. Entries start at the
/// default and only the MLB controller of the serving sector rewrites them;
/// whenever that controller is inactive the whole row equals the default.
class HysteresisTable
{
  public:
    HysteresisTable(int sectorCount, double defaultDb);

    double Get(int servingSector, int neighborSector) const;
    void Set(int servingSector, int neighborSector, double valueDb);

    /// Restores every entry of one serving sector to the default.
    void ResetRow(int servingSector);

    bool RowAtDefault(int servingSector) const;
    double DefaultDb() const { return m_defaultDb; }
    int SectorCount() const { return m_sectorCount; }

  private:
    int m_sectorCount;
    double m_defaultDb;
    std::vector<double> m_values;
};

enum class HandoverCause
{
    A3,
    MlbInducedA3
};

std::string ToString(HandoverCause cause);

struct HandoverEvent
{
    int ueId = 0;
    int sourceSector = 0;
    int targetSector = 0;
    double timestampS = 0.0;
    HandoverCause cause = HandoverCause::A3;
    double hysteresisUsedDb = 0.0;
};

/// A3 entry condition: neighbor RSRP exceeds serving RSRP by strictly more
/// than the hysteresis.
inline bool A3Condition(double servingRsrpDbm, double neighborRsrpDbm, double hysteresisDb)
{
    return neighborRsrpDbm - servingRsrpDbm > hysteresisDb;
}

/// Per-(UE, neighbor) time-to-trigger accumulators.
class A3TimerBank
{
  public:
    A3TimerBank(int ueCount, int sectorCount);

    /// Accumulates dt for every neighbor whose A3 condition holds under its
    /// effective hysteresis, resets the others, and returns a handover event
    /// once an accumulator has seen the condition continuously for ttt.
    /// Ties between simultaneously matured neighbors go to the highest RSRP,
    /// then the lowest sector id. All of the UE's accumulators reset when an
    /// event is emitted.
    std::optional<HandoverEvent> Update(const UeState& ue,
                                        const Measurement& measurement,
                                        const HysteresisTable& table,
                                        const HandoverParams& params,
                                        double dtS,
                                        double nowS);

    void ResetUe(int ueId);
    double Accumulated(int ueId, int neighborSector) const;

  private:
    int m_sectorCount;
    std::vector<double> m_accumS;  ///< ueCount x sectorCount, row-major
};

struct HandoverBookkeeping
{
    long successfulCount = 0;
};

/// Applies an emitted event: retargets the UE and counts the handover.
/// Events whose target equals the source are ignored and not counted.
/// Returns true when the attachment changed.
bool ApplyHandover(UeState& ue, const HandoverEvent& event, HandoverBookkeeping& books);

} // namespace mlbsim

#endif // MLBSIM_HANDOVER_HPP
