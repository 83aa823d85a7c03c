#include "mlbsim/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mlbsim
{

McsClass ClassOfMcs(int mcsIndex)
{
    if (mcsIndex >= 0 && mcsIndex <= 9)
    {
        return McsClass::Qpsk;
    }
    if (mcsIndex >= 10 && mcsIndex <= 16)
    {
        return McsClass::Qam16;
    }
    if (mcsIndex >= 17 && mcsIndex <= 28)
    {
        return McsClass::Qam64;
    }
    throw std::invalid_argument("mcs index outside 0..28");
}

double CellCapacityMbps(McsClass cls)
{
    switch (cls)
    {
    case McsClass::Qpsk:
        return 13.2;
    case McsClass::Qam16:
        return 26.4;
    case McsClass::Qam64:
        return 39.6;
    }
    return 13.2;
}

double PerPrbRateBps(McsClass cls)
{
    return CellCapacityMbps(cls) * 1e6 / 25.0;
}

int McsFromSinr(double sinrDb, const McsThresholds& thresholds)
{
    if (sinrDb < thresholds.qam16Db)
    {
        return thresholds.qpskIndex;
    }
    if (sinrDb < thresholds.qam64Db)
    {
        return thresholds.qam16Index;
    }
    return thresholds.qam64Index;
}

int PrbsRequired(const Flow& flow, int mcsIndex)
{
    double perPrb = PerPrbRateBps(ClassOfMcs(mcsIndex));
    return static_cast<int>(std::ceil(flow.offeredRateBps / perPrb));
}

AllocationResult Allocate(const SectorConfig& sector,
                          std::span<const Flow> flows,
                          std::span<const int> mcsPerFlow,
                          double dtS)
{
    if (dtS <= 0.0)
    {
        throw std::invalid_argument("allocate: dt must be > 0");
    }
    if (flows.size() != mcsPerFlow.size())
    {
        throw std::invalid_argument("allocate: one MCS per flow required");
    }

    AllocationResult result;
    result.vTr = sector.totalPrbs;
    result.flows.resize(flows.size());

    // Flows are visited in ueId order regardless of input order.
    std::vector<size_t> order(flows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return flows[a].ueId < flows[b].ueId; });

    for (size_t i = 0; i < flows.size(); ++i)
    {
        FlowAllocation& fa = result.flows[i];
        fa.ueId = flows[i].ueId;
        fa.requiredPrbs = PrbsRequired(flows[i], mcsPerFlow[i]);
        fa.offeredBits = flows[i].offeredRateBps * dtS;
    }

    int prbsLeft = sector.totalPrbs;
    bool anyUnmet = !flows.empty();
    while (prbsLeft > 0 && anyUnmet)
    {
        anyUnmet = false;
        for (size_t idx : order)
        {
            FlowAllocation& fa = result.flows[idx];
            if (fa.grantedPrbs < fa.requiredPrbs)
            {
                if (prbsLeft > 0)
                {
                    ++fa.grantedPrbs;
                    --prbsLeft;
                }
                if (fa.grantedPrbs < fa.requiredPrbs)
                {
                    anyUnmet = true;
                }
            }
        }
    }

    for (FlowAllocation& fa : result.flows)
    {
        double fraction = fa.requiredPrbs > 0
                              ? static_cast<double>(std::min(fa.grantedPrbs, fa.requiredPrbs)) /
                                    fa.requiredPrbs
                              : 1.0;
        fa.servedBits = fraction * fa.offeredBits;
        fa.lostBits = fa.offeredBits - fa.servedBits;
        result.grantedTotal += fa.grantedPrbs;
        result.offeredBits += fa.offeredBits;
        result.servedBits += fa.servedBits;
        result.lostBits += fa.lostBits;
    }
    result.vAr = sector.totalPrbs - result.grantedTotal;
    return result;
}

} // namespace mlbsim
