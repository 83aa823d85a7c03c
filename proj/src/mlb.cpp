#include "mlbsim/mlb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlbsim
{

std::string ToString(Algorithm a)
{
    switch (a)
    {
    case Algorithm::None:
        return "none";
    case Algorithm::Mlb1:
        return "mlb1";
    case Algorithm::Mlb2:
        return "mlb2";
    }
    return "none";
}

std::string ToString(BetaVariant v)
{
    return v == BetaVariant::Literal ? "literal" : "continuous";
}

Algorithm AlgorithmFromString(const std::string& s)
{
    if (s == "none")
    {
        return Algorithm::None;
    }
    if (s == "mlb1")
    {
        return Algorithm::Mlb1;
    }
    if (s == "mlb2")
    {
        return Algorithm::Mlb2;
    }
    throw std::invalid_argument("algorithm: expected none|mlb1|mlb2, got '" + s + "'");
}

BetaVariant BetaVariantFromString(const std::string& s)
{
    if (s == "literal")
    {
        return BetaVariant::Literal;
    }
    if (s == "continuous")
    {
        return BetaVariant::Continuous;
    }
    throw std::invalid_argument("beta_variant: expected literal|continuous, got '" + s + "'");
}

std::string ToString(MlbPhase p)
{
    return p == MlbPhase::Inactive ? "inactive" : "active";
}

void MlbThresholds::Validate() const
{
    if (thPre < 0.0)
    {
        throw std::invalid_argument("thresholds.th_pre must be >= 0");
    }
    if (!(thPre < thAvail))
    {
        throw std::invalid_argument("thresholds.th_avail must exceed th_pre");
    }
    if (!(thAvail < thPost))
    {
        throw std::invalid_argument("thresholds.th_post must exceed th_avail");
    }
    if (!(thPost < 1.0))
    {
        throw std::invalid_argument("thresholds.th_post must be < 1");
    }
}

void LoadReport::Validate() const
{
    if (!(vTr > 0.0))
    {
        throw std::invalid_argument("load report: v_tr must be > 0");
    }
    if (vAr < 0.0 || vAr > vTr)
    {
        throw std::invalid_argument("load report: v_ar must be in [0, v_tr]");
    }
}

bool IsOverloaded(const LoadReport& report, const MlbThresholds& th)
{
    return report.Ratio() < th.thPre;
}

bool ShouldDeactivate(const LoadReport& report, const MlbThresholds& th)
{
    return report.Ratio() > th.thPost;
}

bool NeighborEligible(const LoadReport& report, const MlbThresholds& th)
{
    return report.Ratio() > th.thAvail;
}

double Beta(double ratio, const MlbThresholds& th, Algorithm algorithm, BetaVariant variant)
{
    if (algorithm == Algorithm::Mlb2)
    {
        return 0.5;
    }
    double beta;
    if (variant == BetaVariant::Literal)
    {
        beta = (th.thAvail - ratio) / (th.thAvail - th.thPost);
    }
    else
    {
        beta = (th.thPost - ratio) / (th.thPost - th.thAvail);
    }
    return std::clamp(beta, 0.0, 1.0);
}

double Alpha(double ratio, const MlbThresholds& th, Algorithm algorithm, BetaVariant variant)
{
    if (ratio > th.thPost)
    {
        return 0.0;
    }
    if (ratio >= th.thAvail)
    {
        return Beta(ratio, th, algorithm, variant);
    }
    return 1.0;
}

double QuantizeHysteresisDb(double rawDb)
{
    return 0.5 * std::ceil(rawDb / 0.5 - 0.5);
}

double EffectiveHysteresisDb(double baseDb, double alpha)
{
    return QuantizeHysteresisDb(alpha * baseDb);
}

MlbTickResult MlbTick(MlbState& state,
                      const LoadReport& ownReport,
                      std::span<const LoadReport> neighborReports,
                      const MlbThresholds& th,
                      double baseHysteresisDb,
                      HysteresisTable& table,
                      double nowS)
{
    MlbTickResult result;
    if (state.algorithm == Algorithm::None)
    {
        return result;
    }

    const int own = ownReport.sectorId;

    if (state.phase == MlbPhase::Active && ShouldDeactivate(ownReport, th))
    {
        state.phase = MlbPhase::Inactive;
        state.alphaByNeighbor.clear();
        result.deactivated = true;
        for (int n = 0; n < table.SectorCount(); ++n)
        {
            if (n == own)
            {
                continue;
            }
            if (table.Get(own, n) != table.DefaultDb())
            {
                result.tableChanged = true;
            }
            NeighborDecision d;
            d.neighborSector = n;
            d.alpha = 1.0;
            d.rawHysteresisDb = baseHysteresisDb;
            d.effectiveHysteresisDb = table.DefaultDb();
            result.decisions.push_back(d);
        }
        table.ResetRow(own);
    }
    else
    {
        if (state.phase == MlbPhase::Inactive && IsOverloaded(ownReport, th))
        {
            state.phase = MlbPhase::Active;
            result.activated = true;
        }
        if (state.phase == MlbPhase::Active)
        {
            for (int n = 0; n < table.SectorCount(); ++n)
            {
                if (n == own)
                {
                    continue;
                }
                const LoadReport* report = nullptr;
                for (const LoadReport& r : neighborReports)
                {
                    if (r.sectorId == n)
                    {
                        report = &r;
                        break;
                    }
                }
                NeighborDecision d;
                d.neighborSector = n;
                if (report != nullptr)
                {
                    d.neighborRatio = report->Ratio();
                    d.alpha = Alpha(report->Ratio(), th, state.algorithm, state.betaVariant);
                }
                else
                {
                    // Missing report: treat the neighbor as ineligible.
                    d.alpha = 1.0;
                }
                d.rawHysteresisDb = d.alpha * baseHysteresisDb;
                d.effectiveHysteresisDb = EffectiveHysteresisDb(baseHysteresisDb, d.alpha);
                state.alphaByNeighbor[n] = d.alpha;
                if (table.Get(own, n) != d.effectiveHysteresisDb)
                {
                    table.Set(own, n, d.effectiveHysteresisDb);
                    result.tableChanged = true;
                }
                result.decisions.push_back(d);
            }
        }
    }

    if (result.tableChanged)
    {
        MeasurementControlMessage msg;
        msg.sectorId = own;
        msg.timestampS = nowS;
        for (int n = 0; n < table.SectorCount(); ++n)
        {
            if (n != own)
            {
                msg.hysteresisByNeighbor.emplace_back(n, table.Get(own, n));
            }
        }
        result.message = msg;
    }
    return result;
}

} // namespace mlbsim
