#include "mlbsim/simulation.hpp"

#include "mlbsim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <ostream>
#include <stdexcept>

namespace mlbsim
{

namespace
{

std::string FormatDouble(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void MixHash(uint64_t& h, double v)
{
    uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    for (int i = 0; i < 8; ++i)
    {
        h ^= (bits >> (8 * i)) & 0xFFu;
        h *= 1099511628211ull;
    }
}

void WriteKpiHeader(std::ostream& os)
{
    os << "scenario,algorithm,ue_count,seed,throughput_mbps,loss_ratio,ho_count\n";
}

void WriteHandoverHeader(std::ostream& os)
{
    os << "timestamp,ue_id,source,target,cause,effective_hysteresis_used\n";
}

void WriteHandoverRow(std::ostream& os, const HandoverEvent& ev)
{
    os << FormatDouble(ev.timestampS) << ',' << ev.ueId << ',' << ev.sourceSector << ','
       << ev.targetSector << ',' << ToString(ev.cause) << ',' << FormatDouble(ev.hysteresisUsedDb)
       << '\n';
}

void WriteMlbDecisionHeader(std::ostream& os)
{
    os << "timestamp,sector,phase,own_ratio,neighbor,neighbor_ratio,alpha,"
          "raw_hysteresis_db,effective_hysteresis_db,message_sent\n";
}

void WriteSectorLoadHeader(std::ostream& os)
{
    os << "time_s,sector,offered_bits,served_bits,lost_bits,granted_prbs,v_ar,ratio\n";
}

} // namespace

KpiRecord Run(const ScenarioConfig& config, const RunSinks& sinks, const RunOptions& options)
{
    config.Validate();

    const int sectorCount = config.SectorCount();
    const int ueCount = config.ueCount;
    const double dt = config.tickS;

    std::vector<SectorConfig> sectors = BuildSectors(config);
    Region region = BuildRegion(config);
    ShadowingMap shadowing(sectorCount, ueCount, config.radio.shadowingStddevDb, config.seed);

    std::vector<UeState> ues = InitUes(ueCount, region, config.mobility.speedMps, config.seed);
    AttachStrongestSector(ues, sectors, config.radio, shadowing);

    std::vector<RngStream> headingStreams;
    headingStreams.reserve(ueCount);
    for (int u = 0; u < ueCount; ++u)
    {
        headingStreams.push_back(HeadingStream(config.seed, u));
    }

    HysteresisTable table(sectorCount, config.handover.defaultHysteresisDb);
    A3TimerBank timers(ueCount, sectorCount);
    HandoverBookkeeping books;

    std::vector<MlbState> controllers(sectorCount);
    for (int s = 0; s < sectorCount; ++s)
    {
        controllers[s].sectorId = s;
        controllers[s].algorithm = config.algorithm;
        controllers[s].betaVariant = config.betaVariant;
    }

    const long ticks = std::llround(config.durationS / dt);
    const long mlbEvery = std::max<long>(1, std::llround(config.mlbPeriodS / dt));
    const long headingEvery =
        std::max<long>(1, std::llround(config.mobility.headingRedrawIntervalS / dt));

    KpiRecord kpi;
    kpi.perSectorThroughputMbps.assign(sectorCount, 0.0);
    kpi.perSectorOfferedBits.assign(sectorCount, 0.0);
    kpi.perSectorServedBits.assign(sectorCount, 0.0);
    kpi.perSectorLostBits.assign(sectorCount, 0.0);
    kpi.tickOfferedBits.reserve(ticks);
    kpi.tickServedBits.reserve(ticks);
    kpi.tickLostBits.reserve(ticks);
    kpi.tickHandovers.reserve(ticks);
    kpi.trajectoryHash = 1469598103934665603ull;

    if (sinks.handoversCsv != nullptr)
    {
        WriteHandoverHeader(*sinks.handoversCsv);
    }
    if (sinks.mlbDecisionsCsv != nullptr)
    {
        WriteMlbDecisionHeader(*sinks.mlbDecisionsCsv);
    }
    if (sinks.sectorLoadCsv != nullptr)
    {
        WriteSectorLoadHeader(*sinks.sectorLoadCsv);
    }

    std::vector<double> periodVArSum(sectorCount, 0.0);
    long periodTicks = 0;

    std::vector<Measurement> measurements(ueCount);
    std::vector<std::vector<Flow>> sectorFlows(sectorCount);
    std::vector<std::vector<int>> sectorMcs(sectorCount);
    std::vector<HandoverEvent> events;

    for (long k = 0; k < ticks; ++k)
    {
        const double now = k * dt;

        // Mobility.
        if (k > 0 && k % headingEvery == 0)
        {
            for (int u = 0; u < ueCount; ++u)
            {
                RedrawHeading(ues[u], headingStreams[u]);
            }
        }
        for (int u = 0; u < ueCount; ++u)
        {
            ues[u] = StepUe(ues[u], dt, region);
            MixHash(kpi.trajectoryHash, ues[u].position.x);
            MixHash(kpi.trajectoryHash, ues[u].position.y);
        }
        if (options.recordTrajectories)
        {
            std::vector<Vec2> snapshot(ueCount);
            for (int u = 0; u < ueCount; ++u)
            {
                snapshot[u] = ues[u].position;
            }
            kpi.trajectories.push_back(std::move(snapshot));
        }

        // Measurements.
        for (int u = 0; u < ueCount; ++u)
        {
            measurements[u] =
                Measure(u, ues[u].servingSector, sectors, ues[u].position, config.radio, shadowing, now);
        }

        // A3 timers; events execute at tick end.
        events.clear();
        for (int u = 0; u < ueCount; ++u)
        {
            if (auto ev = timers.Update(ues[u], measurements[u], table, config.handover, dt, now))
            {
                events.push_back(*ev);
            }
        }

        // Scheduling on the attachments as of the start of the tick.
        for (int s = 0; s < sectorCount; ++s)
        {
            sectorFlows[s].clear();
            sectorMcs[s].clear();
        }
        for (int u = 0; u < ueCount; ++u)
        {
            const int s = ues[u].servingSector;
            sectorFlows[s].push_back(Flow{u, config.traffic.offeredRateBps, s});
            sectorMcs[s].push_back(McsFromSinr(measurements[u].servingSinrDb, config.mcs));
        }

        double tickOffered = 0.0;
        double tickServed = 0.0;
        double tickLost = 0.0;
        for (int s = 0; s < sectorCount; ++s)
        {
            AllocationResult ar = Allocate(sectors[s], sectorFlows[s], sectorMcs[s], dt);
            periodVArSum[s] += ar.vAr;

            kpi.perSectorOfferedBits[s] += ar.offeredBits;
            kpi.perSectorServedBits[s] += ar.servedBits;
            kpi.perSectorLostBits[s] += ar.lostBits;
            tickOffered += ar.offeredBits;
            tickServed += ar.servedBits;
            tickLost += ar.lostBits;

            double conservation = std::abs(ar.servedBits + ar.lostBits - ar.offeredBits);
            if (ar.offeredBits > 0.0)
            {
                conservation /= ar.offeredBits;
            }
            kpi.maxRelConservationError = std::max(kpi.maxRelConservationError, conservation);
            kpi.maxGrantedPrbsPerTick = std::max(kpi.maxGrantedPrbsPerTick, ar.grantedTotal);
            kpi.maxSectorTickRateMbps =
                std::max(kpi.maxSectorTickRateMbps, ar.servedBits / dt / 1e6);

            if (sinks.sectorLoadCsv != nullptr)
            {
                *sinks.sectorLoadCsv << FormatDouble(now) << ',' << s << ','
                                     << FormatDouble(ar.offeredBits) << ','
                                     << FormatDouble(ar.servedBits) << ','
                                     << FormatDouble(ar.lostBits) << ',' << ar.grantedTotal << ','
                                     << ar.vAr << ','
                                     << FormatDouble(static_cast<double>(ar.vAr) / ar.vTr) << '\n';
            }
        }
        ++periodTicks;
        kpi.tickOfferedBits.push_back(tickOffered);
        kpi.tickServedBits.push_back(tickServed);
        kpi.tickLostBits.push_back(tickLost);

        // Handover execution, serial in ueId order.
        int tickHo = 0;
        for (const HandoverEvent& ev : events)
        {
            if (ApplyHandover(ues[ev.ueId], ev, books))
            {
                ++tickHo;
                kpi.handovers.push_back(ev);
                if (sinks.handoversCsv != nullptr)
                {
                    WriteHandoverRow(*sinks.handoversCsv, ev);
                }
            }
        }
        kpi.tickHandovers.push_back(tickHo);

        // MLB controllers on the period boundary, serial in sector order.
        if ((k + 1) % mlbEvery == 0)
        {
            const double periodEnd = (k + 1) * dt;
            std::vector<LoadReport> reports(sectorCount);
            for (int s = 0; s < sectorCount; ++s)
            {
                reports[s].sectorId = s;
                reports[s].vAr = periodVArSum[s] / periodTicks;
                reports[s].vTr = config.totalPrbs;
                reports[s].Validate();
            }
            for (int s = 0; s < sectorCount; ++s)
            {
                MlbTickResult result = MlbTick(controllers[s], reports[s], reports,
                                               config.thresholds, config.handover.defaultHysteresisDb,
                                               table, periodEnd);
                if (result.activated)
                {
                    ++kpi.mlbActivations;
                }
                if (result.deactivated)
                {
                    ++kpi.mlbDeactivations;
                }
                if (result.message.has_value())
                {
                    ++kpi.controlMessageCount;
                }
                if (sinks.mlbDecisionsCsv != nullptr)
                {
                    for (const NeighborDecision& d : result.decisions)
                    {
                        *sinks.mlbDecisionsCsv
                            << FormatDouble(periodEnd) << ',' << s << ','
                            << ToString(controllers[s].phase) << ','
                            << FormatDouble(reports[s].Ratio()) << ',' << d.neighborSector << ','
                            << FormatDouble(d.neighborRatio) << ',' << FormatDouble(d.alpha) << ','
                            << FormatDouble(d.rawHysteresisDb) << ','
                            << FormatDouble(d.effectiveHysteresisDb) << ','
                            << (result.message.has_value() ? 1 : 0) << '\n';
                    }
                }
            }
            std::fill(periodVArSum.begin(), periodVArSum.end(), 0.0);
            periodTicks = 0;
        }

        // Controller/table consistency: an inactive sector shows the default
        // hysteresis everywhere.
        for (int s = 0; s < sectorCount; ++s)
        {
            if (controllers[s].phase == MlbPhase::Inactive &&
                (!table.RowAtDefault(s) || !controllers[s].alphaByNeighbor.empty()))
            {
                throw std::logic_error("mlb invariant violated: inactive sector with modified state");
            }
        }
    }

    kpi.hoCount = books.successfulCount;
    for (int s = 0; s < sectorCount; ++s)
    {
        kpi.offeredBitsTotal += kpi.perSectorOfferedBits[s];
        kpi.servedBitsTotal += kpi.perSectorServedBits[s];
        kpi.lostBitsTotal += kpi.perSectorLostBits[s];
        kpi.perSectorThroughputMbps[s] = kpi.perSectorServedBits[s] / config.durationS / 1e6;
    }
    kpi.globalThroughputMbps = kpi.servedBitsTotal / config.durationS / 1e6;
    kpi.lossRatio = kpi.offeredBitsTotal > 0.0 ? kpi.lostBitsTotal / kpi.offeredBitsTotal : 0.0;

    if (sinks.kpiCsv != nullptr)
    {
        WriteKpiHeader(*sinks.kpiCsv);
        *sinks.kpiCsv << config.name << ',' << ToString(config.algorithm) << ',' << config.ueCount
                      << ',' << config.seed << ',' << FormatDouble(kpi.globalThroughputMbps) << ','
                      << FormatDouble(kpi.lossRatio) << ',' << kpi.hoCount << '\n';
    }
    return kpi;
}

} // namespace mlbsim
