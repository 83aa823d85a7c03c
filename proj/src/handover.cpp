#include "mlbsim/handover.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlbsim
{

HysteresisTable::HysteresisTable(int sectorCount, double defaultDb)
    : m_sectorCount(sectorCount),
      m_defaultDb(defaultDb),
      m_values(static_cast<size_t>(sectorCount) * sectorCount, defaultDb)
{
    if (sectorCount < 1)
    {
        throw std::invalid_argument("hysteresis table: sector count must be >= 1");
    }
    if (defaultDb < 0.0)
    {
        throw std::invalid_argument("hysteresis table: default hysteresis must be >= 0");
    }
}

double HysteresisTable::Get(int servingSector, int neighborSector) const
{
    return m_values[static_cast<size_t>(servingSector) * m_sectorCount + neighborSector];
}

void HysteresisTable::Set(int servingSector, int neighborSector, double valueDb)
{
    if (valueDb < 0.0 || valueDb > m_defaultDb)
    {
        throw std::invalid_argument("hysteresis table: value outside [0, default]");
    }
    m_values[static_cast<size_t>(servingSector) * m_sectorCount + neighborSector] = valueDb;
}

void HysteresisTable::ResetRow(int servingSector)
{
    for (int n = 0; n < m_sectorCount; ++n)
    {
        m_values[static_cast<size_t>(servingSector) * m_sectorCount + n] = m_defaultDb;
    }
}

bool HysteresisTable::RowAtDefault(int servingSector) const
{
    for (int n = 0; n < m_sectorCount; ++n)
    {
        if (m_values[static_cast<size_t>(servingSector) * m_sectorCount + n] != m_defaultDb)
        {
            return false;
        }
    }
    return true;
}

std::string ToString(HandoverCause cause)
{
    return cause == HandoverCause::A3 ? "a3" : "mlb-induced-a3";
}

A3TimerBank::A3TimerBank(int ueCount, int sectorCount)
    : m_sectorCount(sectorCount), m_accumS(static_cast<size_t>(ueCount) * sectorCount, 0.0)
{
}

std::optional<HandoverEvent> A3TimerBank::Update(const UeState& ue,
                                                 const Measurement& measurement,
                                                 const HysteresisTable& table,
                                                 const HandoverParams& params,
                                                 double dtS,
                                                 double nowS)
{
    if (dtS <= 0.0)
    {
        throw std::invalid_argument("update_a3: dt must be > 0");
    }
    const int serving = ue.servingSector;
    double* accum = &m_accumS[static_cast<size_t>(ue.ueId) * m_sectorCount];

    int bestTarget = -1;
    double bestRsrp = 0.0;
    for (int n = 0; n < m_sectorCount; ++n)
    {
        if (n == serving)
        {
            accum[n] = 0.0;
            continue;
        }
        bool holds = A3Condition(measurement.rsrpDbm[serving], measurement.rsrpDbm[n], table.Get(serving, n));
        if (!holds)
        {
            accum[n] = 0.0;
            continue;
        }
        accum[n] = std::min(accum[n] + dtS, params.tttS);
        if (accum[n] >= params.tttS)
        {
            // Matured this tick; keep the strongest, ties to the lowest id.
            if (bestTarget < 0 || measurement.rsrpDbm[n] > bestRsrp)
            {
                bestTarget = n;
                bestRsrp = measurement.rsrpDbm[n];
            }
        }
    }

    if (bestTarget < 0)
    {
        return std::nullopt;
    }

    ResetUe(ue.ueId);
    HandoverEvent event;
    event.ueId = ue.ueId;
    event.sourceSector = serving;
    event.targetSector = bestTarget;
    event.timestampS = nowS;
    event.hysteresisUsedDb = table.Get(serving, bestTarget);
    event.cause = event.hysteresisUsedDb < params.defaultHysteresisDb ? HandoverCause::MlbInducedA3
                                                                      : HandoverCause::A3;
    return event;
}

void A3TimerBank::ResetUe(int ueId)
{
    std::fill_n(&m_accumS[static_cast<size_t>(ueId) * m_sectorCount], m_sectorCount, 0.0);
}

double A3TimerBank::Accumulated(int ueId, int neighborSector) const
{
    return m_accumS[static_cast<size_t>(ueId) * m_sectorCount + neighborSector];
}

bool ApplyHandover(UeState& ue, const HandoverEvent& event, HandoverBookkeeping& books)
{
    if (event.targetSector == event.sourceSector)
    {
        return false;
    }
    ue.servingSector = event.targetSector;
    ++books.successfulCount;
    return true;
}

} // namespace mlbsim
