#ifndef MLBSIM_SIMULATION_HPP
#define MLBSIM_SIMULATION_HPP

#include "mlbsim/scenario.hpp"

#include <iosfwd>
#include <vector>

namespace mlbsim
{

/// Per-run KPIs plus the per-tick series behind them.
struct KpiRecord
{
    // Run-level aggregates.
    double globalThroughputMbps = 0.0;
    double lossRatio = 0.0;
    long hoCount = 0;
    long controlMessageCount = 0;
    long mlbActivations = 0;
    long mlbDeactivations = 0;
    double offeredBitsTotal = 0.0;
    double servedBitsTotal = 0.0;
    double lostBitsTotal = 0.0;
    std::vector<double> perSectorThroughputMbps;
    std::vector<double> perSectorOfferedBits;
    std::vector<double> perSectorServedBits;
    std::vector<double> perSectorLostBits;

    // Per-tick global series.
    std::vector<double> tickOfferedBits;
    std::vector<double> tickServedBits;
    std::vector<double> tickLostBits;
    std::vector<int> tickHandovers;

    // Full handover event log.
    std::vector<HandoverEvent> handovers;

    // Run diagnostics.
    double maxRelConservationError = 0.0;  ///< worst |served+lost-offered| / offered
    int maxGrantedPrbsPerTick = 0;         ///< worst per-sector PRB grant in one tick
    double maxSectorTickRateMbps = 0.0;    ///< worst instantaneous per-sector served rate
    uint64_t trajectoryHash = 0;           ///< digest of every UE position every tick

    // Filled only when RunOptions::recordTrajectories is set:
    // trajectories[tick][ue] = position after the mobility step.
    std::vector<std::vector<Vec2>> trajectories;
};

/// Optional CSV outputs; null streams are skipped.
struct RunSinks
{
    std::ostream* kpiCsv = nullptr;
    std::ostream* handoversCsv = nullptr;
    std::ostream* mlbDecisionsCsv = nullptr;
    std::ostream* sectorLoadCsv = nullptr;
};

struct RunOptions
{
    bool recordTrajectories = false;
};

/// Runs one scenario tick by tick: mobility, measurements, A3 timers,
/// scheduling, KPI accounting, handover execution at tick end, and the MLB
/// controllers on every period boundary. Fully deterministic per
/// (config, seed).
KpiRecord Run(const ScenarioConfig& config, const RunSinks& sinks = {}, const RunOptions& options = {});

} // namespace mlbsim

#endif // MLBSIM_SIMULATION_HPP
