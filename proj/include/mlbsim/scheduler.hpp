#ifndef MLBSIM_SCHEDULER_HPP
#define MLBSIM_SCHEDULER_HPP

#include "mlbsim/radio-model.hpp"

#include <span>
#include <vector>

namespace mlbsim
{

enum class McsClass
{
    Qpsk,
    Qam16,
    Qam64
};

/// Modulation class of an MCS index: 0-9 QPSK, 10-16 16QAM, 17-28 64QAM.
/// Throws std::invalid_argument outside 0..28.
McsClass ClassOfMcs(int mcsIndex);

/// Total cell capacity at 25 PRBs for a modulation class, in Mbps
/// (13.2 / 26.4 / 39.6).
double CellCapacityMbps(McsClass cls);

/// Downlink rate carried by one PRB for a modulation class, in bits/s.
double PerPrbRateBps(McsClass cls);

/// Link-adaptation rule: SINR below qam16Db selects the QPSK tier, below
/// qam64Db the 16QAM tier, otherwise 64QAM. One representative index per
/// tier.
struct McsThresholds
{
    double qam16Db = 5.0;
    double qam64Db = 14.0;
    int qpskIndex = 5;
    int qam16Index = 12;
    int qam64Index = 20;
};

int McsFromSinr(double sinrDb, const McsThresholds& thresholds = {});

/// Constant-rate downlink flow of one UE.
struct Flow
{
    int ueId = 0;
    double offeredRateBps = 0.0;
    int servingSector = 0;
};

/// PRBs needed to carry the flow's offered rate at the given MCS
/// (ceiling of offered rate over the per-PRB rate; independent of dt).
int PrbsRequired(const Flow& flow, int mcsIndex);

struct FlowAllocation
{
    int ueId = 0;
    int requiredPrbs = 0;
    int grantedPrbs = 0;
    double offeredBits = 0.0;
    double servedBits = 0.0;
    double lostBits = 0.0;
};

struct AllocationResult
{
    std::vector<FlowAllocation> flows;
    int grantedTotal = 0;
    int vAr = 0;  ///< free PRBs after allocation
    int vTr = 0;  ///< total PRBs
    double offeredBits = 0.0;
    double servedBits = 0.0;
    double lostBits = 0.0;
};

/// Grants PRBs round-robin, one PRB at a time across flows in ueId order,
/// until every requirement is met or the sector's PRBs run out. Bits a flow
/// cannot be served this tick are counted lost (no queueing).
AllocationResult Allocate(const SectorConfig& sector,
                          std::span<const Flow> flows,
                          std::span<const int> mcsPerFlow,
                          double dtS);

} // namespace mlbsim

#endif // MLBSIM_SCHEDULER_HPP
