#include "mlbsim/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

using nlohmann::json;

namespace mlbsim
{

void ScenarioConfig::Validate() const
{
    auto fail = [](const std::string& key, const std::string& why) {
        throw std::invalid_argument("config: " + key + " " + why);
    };
    if (!(durationS > 0.0))
    {
        fail("duration_s", "must be > 0");
    }
    if (!(tickS > 0.0))
    {
        fail("tick_s", "must be > 0");
    }
    if (!(mlbPeriodS >= tickS))
    {
        fail("mlb_period_s", "must be >= tick_s");
    }
    if (!(interSiteDistanceM > 0.0))
    {
        fail("inter_site_distance_m", "must be > 0");
    }
    if (siteCount < 1)
    {
        fail("site_count", "must be >= 1");
    }
    if (sectorsPerSite != 3)
    {
        fail("sectors_per_site", "must be 3 (three-sector sites)");
    }
    if (totalPrbs < 1)
    {
        fail("total_prbs", "must be >= 1");
    }
    if (ueCount < 1)
    {
        fail("ue_count", "must be >= 1");
    }
    try
    {
        thresholds.Validate();
    }
    catch (const std::invalid_argument& e)
    {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (handover.defaultHysteresisDb < 0.0)
    {
        fail("handover.default_hysteresis_db", "must be >= 0");
    }
    if (handover.tttS < 0.0)
    {
        fail("handover.ttt_s", "must be >= 0");
    }
    if (!std::isfinite(radio.referenceLossDb))
    {
        fail("radio.reference_loss_db", "must be finite");
    }
    if (!(radio.exponent > 0.0))
    {
        fail("radio.exponent", "must be > 0");
    }
    if (!(radio.referenceDistanceM > 0.0))
    {
        fail("radio.reference_distance_m", "must be > 0");
    }
    if (radio.shadowingStddevDb < 0.0)
    {
        fail("radio.shadowing_stddev_db", "must be >= 0");
    }
    if (!std::isfinite(txPowerDbm))
    {
        fail("radio.tx_power_dbm", "must be finite");
    }
    if (!std::isfinite(radio.noiseFloorDbm))
    {
        fail("radio.noise_floor_dbm", "must be finite");
    }
    if (!(mcs.qam16Db < mcs.qam64Db))
    {
        fail("mcs.qam64_threshold_db", "must exceed mcs.qam16_threshold_db");
    }
    if (!(traffic.offeredRateBps > 0.0))
    {
        fail("traffic.offered_rate_bps", "must be > 0");
    }
    if (!(mobility.speedMps > 0.0))
    {
        fail("mobility.speed_mps", "must be > 0");
    }
    if (!(mobility.headingRedrawIntervalS > 0.0))
    {
        fail("mobility.heading_redraw_interval_s", "must be > 0");
    }
    if (mobility.regionMarginM < 0.0)
    {
        fail("mobility.region_margin_m", "must be >= 0");
    }
}

std::vector<SectorConfig> BuildSectors(const ScenarioConfig& config)
{
    const double d = config.interSiteDistanceM;
    std::vector<Vec2> sites = {
        {0.0, 0.0},
        {d, 0.0},
        {d / 2.0, d * std::sqrt(3.0) / 2.0},
    };
    sites.resize(config.siteCount, Vec2{0.0, 0.0});
    if (config.siteCount > 3)
    {
        throw std::invalid_argument("config: site_count must be <= 3");
    }

    std::vector<SectorConfig> sectors;
    sectors.reserve(config.SectorCount());
    for (int site = 0; site < config.siteCount; ++site)
    {
        for (int k = 0; k < config.sectorsPerSite; ++k)
        {
            SectorConfig s;
            s.sectorId = site * config.sectorsPerSite + k;
            s.sitePosition = sites[site];
            s.azimuthDeg = 120.0 * k;
            s.txPowerDbm = config.txPowerDbm;
            s.totalPrbs = config.totalPrbs;
            sectors.push_back(s);
        }
    }
    return sectors;
}

Region BuildRegion(const ScenarioConfig& config)
{
    const double d = config.interSiteDistanceM;
    const double m = config.mobility.regionMarginM;
    Region r;
    r.minX = -m;
    r.maxX = d + m;
    r.minY = -m;
    r.maxY = d * std::sqrt(3.0) / 2.0 + m;
    return r;
}

namespace
{

void RejectUnknownKeys(const json& j, const std::set<std::string>& known, const std::string& scope)
{
    for (auto it = j.begin(); it != j.end(); ++it)
    {
        if (known.find(it.key()) == known.end())
        {
            throw std::invalid_argument("config: unknown key '" + scope + it.key() + "'");
        }
    }
}

template <typename T>
void ReadKey(const json& j, const char* key, T& out)
{
    if (j.contains(key))
    {
        j.at(key).get_to(out);
    }
}

} // namespace

ScenarioConfig ConfigFromJsonText(const std::string& jsonText)
{
    json j;
    try
    {
        j = json::parse(jsonText);
    }
    catch (const json::parse_error& e)
    {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }

    ScenarioConfig c;
    RejectUnknownKeys(j,
                      {"name", "duration_s", "tick_s", "mlb_period_s", "inter_site_distance_m",
                       "site_count", "sectors_per_site", "total_prbs", "ue_count", "seed",
                       "algorithm", "beta_variant", "thresholds", "handover", "radio", "mcs",
                       "traffic", "mobility"},
                      "");
    ReadKey(j, "name", c.name);
    ReadKey(j, "duration_s", c.durationS);
    ReadKey(j, "tick_s", c.tickS);
    ReadKey(j, "mlb_period_s", c.mlbPeriodS);
    ReadKey(j, "inter_site_distance_m", c.interSiteDistanceM);
    ReadKey(j, "site_count", c.siteCount);
    ReadKey(j, "sectors_per_site", c.sectorsPerSite);
    ReadKey(j, "total_prbs", c.totalPrbs);
    ReadKey(j, "ue_count", c.ueCount);
    ReadKey(j, "seed", c.seed);
    if (j.contains("algorithm"))
    {
        c.algorithm = AlgorithmFromString(j.at("algorithm").get<std::string>());
    }
    if (j.contains("beta_variant"))
    {
        c.betaVariant = BetaVariantFromString(j.at("beta_variant").get<std::string>());
    }
    if (j.contains("thresholds"))
    {
        const json& t = j.at("thresholds");
        RejectUnknownKeys(t, {"th_pre", "th_avail", "th_post"}, "thresholds.");
        ReadKey(t, "th_pre", c.thresholds.thPre);
        ReadKey(t, "th_avail", c.thresholds.thAvail);
        ReadKey(t, "th_post", c.thresholds.thPost);
    }
    if (j.contains("handover"))
    {
        const json& h = j.at("handover");
        RejectUnknownKeys(h, {"default_hysteresis_db", "ttt_s"}, "handover.");
        ReadKey(h, "default_hysteresis_db", c.handover.defaultHysteresisDb);
        ReadKey(h, "ttt_s", c.handover.tttS);
    }
    if (j.contains("radio"))
    {
        const json& r = j.at("radio");
        RejectUnknownKeys(r,
                          {"tx_power_dbm", "reference_loss_db", "exponent", "reference_distance_m",
                           "shadowing_stddev_db", "noise_floor_dbm"},
                          "radio.");
        ReadKey(r, "tx_power_dbm", c.txPowerDbm);
        ReadKey(r, "reference_loss_db", c.radio.referenceLossDb);
        ReadKey(r, "exponent", c.radio.exponent);
        ReadKey(r, "reference_distance_m", c.radio.referenceDistanceM);
        ReadKey(r, "shadowing_stddev_db", c.radio.shadowingStddevDb);
        ReadKey(r, "noise_floor_dbm", c.radio.noiseFloorDbm);
    }
    if (j.contains("mcs"))
    {
        const json& m = j.at("mcs");
        RejectUnknownKeys(m, {"qam16_threshold_db", "qam64_threshold_db"}, "mcs.");
        ReadKey(m, "qam16_threshold_db", c.mcs.qam16Db);
        ReadKey(m, "qam64_threshold_db", c.mcs.qam64Db);
    }
    if (j.contains("traffic"))
    {
        const json& t = j.at("traffic");
        RejectUnknownKeys(t, {"offered_rate_bps"}, "traffic.");
        ReadKey(t, "offered_rate_bps", c.traffic.offeredRateBps);
    }
    if (j.contains("mobility"))
    {
        const json& m = j.at("mobility");
        RejectUnknownKeys(m, {"speed_mps", "heading_redraw_interval_s", "region_margin_m"},
                          "mobility.");
        ReadKey(m, "speed_mps", c.mobility.speedMps);
        ReadKey(m, "heading_redraw_interval_s", c.mobility.headingRedrawIntervalS);
        ReadKey(m, "region_margin_m", c.mobility.regionMarginM);
    }
    c.Validate();
    return c;
}

ScenarioConfig LoadConfigFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw std::runtime_error("config: cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return ConfigFromJsonText(buffer.str());
}

std::string ConfigToJsonText(const ScenarioConfig& c)
{
    json j;
    j["name"] = c.name;
    j["duration_s"] = c.durationS;
    j["tick_s"] = c.tickS;
    j["mlb_period_s"] = c.mlbPeriodS;
    j["inter_site_distance_m"] = c.interSiteDistanceM;
    j["site_count"] = c.siteCount;
    j["sectors_per_site"] = c.sectorsPerSite;
    j["total_prbs"] = c.totalPrbs;
    j["ue_count"] = c.ueCount;
    j["seed"] = c.seed;
    j["algorithm"] = ToString(c.algorithm);
    j["beta_variant"] = ToString(c.betaVariant);
    j["thresholds"] = {{"th_pre", c.thresholds.thPre},
                       {"th_avail", c.thresholds.thAvail},
                       {"th_post", c.thresholds.thPost}};
    j["handover"] = {{"default_hysteresis_db", c.handover.defaultHysteresisDb},
                     {"ttt_s", c.handover.tttS}};
    j["radio"] = {{"tx_power_dbm", c.txPowerDbm},
                  {"reference_loss_db", c.radio.referenceLossDb},
                  {"exponent", c.radio.exponent},
                  {"reference_distance_m", c.radio.referenceDistanceM},
                  {"shadowing_stddev_db", c.radio.shadowingStddevDb},
                  {"noise_floor_dbm", c.radio.noiseFloorDbm}};
    j["mcs"] = {{"qam16_threshold_db", c.mcs.qam16Db}, {"qam64_threshold_db", c.mcs.qam64Db}};
    j["traffic"] = {{"offered_rate_bps", c.traffic.offeredRateBps}};
    j["mobility"] = {{"speed_mps", c.mobility.speedMps},
                     {"heading_redraw_interval_s", c.mobility.headingRedrawIntervalS},
                     {"region_margin_m", c.mobility.regionMarginM}};
    return j.dump(2) + "\n";
}

} // namespace mlbsim
