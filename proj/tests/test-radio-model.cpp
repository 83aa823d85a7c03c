#include "mlbsim/radio-model.hpp"

#include "mlbsim/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace mlbsim;

namespace
{

PathLossParams DefaultParams()
{
    return PathLossParams{};
}

SectorConfig MakeSector(int id, Vec2 site, double azimuthDeg, double txDbm = 46.0)
{
    SectorConfig s;
    s.sectorId = id;
    s.sitePosition = site;
    s.azimuthDeg = azimuthDeg;
    s.txPowerDbm = txDbm;
    return s;
}

} // namespace

TEST_SUITE("radio_model")
{
    TEST_CASE("path loss at the reference distance is the reference loss")
    {
        PathLossParams p = DefaultParams();
        CHECK(PathLossDb(p.referenceDistanceM, p) == doctest::Approx(34.5).epsilon(1e-12));
    }

    TEST_CASE("one decade of distance adds 10 * exponent dB")
    {
        PathLossParams p = DefaultParams();
        double loss = PathLossDb(10.0 * p.referenceDistanceM, p);
        CHECK(loss == doctest::Approx(34.5 + 35.0).epsilon(1e-12));
    }

    TEST_CASE("500 m at exponent 3.5 gives 128.9639501518 dB")
    {
        PathLossParams p = DefaultParams();
        CHECK(PathLossDb(500.0, p) == doctest::Approx(128.96395015176066).epsilon(1e-12));
    }

    TEST_CASE("shadowing adds linearly and distances clamp at the reference")
    {
        PathLossParams p = DefaultParams();
        CHECK(PathLossDb(500.0, p, 4.5) == doctest::Approx(128.96395015176066 + 4.5));
        CHECK(PathLossDb(0.2 * p.referenceDistanceM, p) == doctest::Approx(p.referenceLossDb));
    }

    TEST_CASE("non-finite distance is rejected")
    {
        PathLossParams p = DefaultParams();
        CHECK_THROWS_AS(PathLossDb(std::nan(""), p), std::invalid_argument);
        CHECK_THROWS_AS(PathLossDb(std::numeric_limits<double>::infinity(), p),
                        std::invalid_argument);
    }

    TEST_CASE("path loss is monotone nondecreasing in distance")
    {
        PathLossParams p = DefaultParams();
        RngStream rng(7, "test", 0);
        for (int i = 0; i < 1000; ++i)
        {
            double d1 = rng.UniformDouble(0.1, 2000.0);
            double d2 = rng.UniformDouble(0.1, 2000.0);
            if (d1 > d2)
            {
                std::swap(d1, d2);
            }
            CHECK(PathLossDb(d1, p) <= PathLossDb(d2, p) + 1e-12);
        }
    }

    TEST_CASE("antenna gain: boresight, 3 dB beamwidth edge, back lobe")
    {
        CHECK(AntennaGainDb(0.0) == 0.0);
        CHECK(AntennaGainDb(65.0) == doctest::Approx(-12.0).epsilon(1e-12));
        CHECK(AntennaGainDb(180.0) == doctest::Approx(-20.0).epsilon(1e-12));
    }

    TEST_CASE("antenna gain is symmetric, periodic and bounded")
    {
        for (double off = -360.0; off <= 360.0; off += 7.3)
        {
            double g = AntennaGainDb(off);
            CHECK(g <= 0.0);
            CHECK(g >= -20.0);
            CHECK(AntennaGainDb(-off) == doctest::Approx(g));
            CHECK(AntennaGainDb(off + 360.0) == doctest::Approx(g));
        }
    }

    TEST_CASE("rsrp at 500 m boresight")
    {
        PathLossParams p = DefaultParams();
        SectorConfig s = MakeSector(0, {0.0, 0.0}, 0.0);
        double r = RsrpDbm(s, {500.0, 0.0}, p);
        CHECK(r == doctest::Approx(46.0 - 128.96395015176066).epsilon(1e-12));
    }

    TEST_CASE("rsrp at the reference distance equals tx minus reference loss")
    {
        PathLossParams p = DefaultParams();
        SectorConfig s = MakeSector(0, {0.0, 0.0}, 0.0);
        CHECK(RsrpDbm(s, {1.0, 0.0}, p) == doctest::Approx(46.0 - 34.5).epsilon(1e-12));
    }

    TEST_CASE("back lobe is exactly 20 dB below boresight")
    {
        PathLossParams p = DefaultParams();
        SectorConfig front = MakeSector(0, {0.0, 0.0}, 0.0);
        SectorConfig back = MakeSector(1, {0.0, 0.0}, 180.0);
        Vec2 ue{500.0, 0.0};
        CHECK(RsrpDbm(back, ue, p) == doctest::Approx(RsrpDbm(front, ue, p) - 20.0).epsilon(1e-12));
    }

    TEST_CASE("UE co-located with the site clamps distance without error")
    {
        PathLossParams p = DefaultParams();
        SectorConfig s = MakeSector(0, {10.0, 10.0}, 0.0);
        CHECK(RsrpDbm(s, {10.0, 10.0}, p) == doctest::Approx(46.0 - 34.5));
    }

    TEST_CASE("rsrp strictly decreases with distance along a fixed bearing")
    {
        PathLossParams p = DefaultParams();
        SectorConfig s = MakeSector(0, {0.0, 0.0}, 30.0);
        double prev = RsrpDbm(s, {2.0 * std::cos(0.7), 2.0 * std::sin(0.7)}, p);
        for (double d = 10.0; d < 1500.0; d += 25.0)
        {
            double r = RsrpDbm(s, {d * std::cos(0.7), d * std::sin(0.7)}, p);
            CHECK(r < prev);
            prev = r;
        }
    }

    TEST_CASE("sinr without interferers is signal over noise")
    {
        double rsrp[] = {-80.0};
        CHECK(SinrFromRsrpDbm(rsrp, 0, -101.5) == doctest::Approx(21.5).epsilon(1e-9));
    }

    TEST_CASE("sinr with one equal interferer is about 0 dB")
    {
        double rsrp[] = {-80.0, -80.0};
        CHECK(SinrFromRsrpDbm(rsrp, 0, -200.0) == doctest::Approx(0.0).epsilon(1e-9));
    }

    TEST_CASE("sinr with two equal interferers is -3.0103 dB")
    {
        double rsrp[] = {-80.0, -80.0, -80.0};
        CHECK(SinrFromRsrpDbm(rsrp, 0, -200.0) ==
              doctest::Approx(-3.010299956639812).epsilon(1e-6));
    }

    TEST_CASE("SinrDb equals the rsrp-vector route on a real layout")
    {
        PathLossParams p = DefaultParams();
        std::vector<SectorConfig> sectors;
        for (int i = 0; i < 3; ++i)
        {
            sectors.push_back(MakeSector(i, {250.0 * i, 100.0}, 120.0 * i));
        }
        RngStream rng(3, "test", 1);
        for (int i = 0; i < 200; ++i)
        {
            Vec2 ue{rng.UniformDouble(-200.0, 700.0), rng.UniformDouble(-200.0, 700.0)};
            std::vector<double> rsrp(3);
            for (int s = 0; s < 3; ++s)
            {
                rsrp[s] = RsrpDbm(sectors[s], ue, p);
            }
            double direct = SinrDb(sectors[1], sectors, ue, p);
            double viaVector = SinrFromRsrpDbm(rsrp, 1, p.noiseFloorDbm);
            CHECK(direct == doctest::Approx(viaVector).epsilon(1e-12));
        }
    }

    TEST_CASE("interference only degrades: sinr <= signal - noise")
    {
        PathLossParams p = DefaultParams();
        RngStream rng(11, "test", 2);
        for (int i = 0; i < 1000; ++i)
        {
            std::vector<double> rsrp(5);
            for (double& r : rsrp)
            {
                r = rng.UniformDouble(-120.0, -40.0);
            }
            double sinr = SinrFromRsrpDbm(rsrp, 2, p.noiseFloorDbm);
            CHECK(sinr <= rsrp[2] - p.noiseFloorDbm + 1e-12);
        }
    }

    TEST_CASE("shadowing map is frozen per pair and reproducible per seed")
    {
        ShadowingMap a(9, 10, 6.0, 42);
        ShadowingMap b(9, 10, 6.0, 42);
        ShadowingMap c(9, 10, 6.0, 43);
        bool anyDiffer = false;
        for (int s = 0; s < 9; ++s)
        {
            for (int u = 0; u < 10; ++u)
            {
                CHECK(a.Get(s, u) == b.Get(s, u));
                anyDiffer = anyDiffer || a.Get(s, u) != c.Get(s, u);
            }
        }
        CHECK(anyDiffer);
        ShadowingMap off(9, 10, 0.0, 42);
        CHECK(!off.Enabled());
        CHECK(off.Get(3, 5) == 0.0);
    }

    TEST_CASE("Measure fills one rsrp per sector and the serving sinr")
    {
        PathLossParams p = DefaultParams();
        std::vector<SectorConfig> sectors;
        for (int i = 0; i < 4; ++i)
        {
            sectors.push_back(MakeSector(i, {200.0 * i, 0.0}, 0.0));
        }
        ShadowingMap shadowing;
        Measurement m = Measure(7, 2, sectors, {350.0, 120.0}, p, shadowing, 1.25);
        CHECK(m.ueId == 7);
        CHECK(m.timestampS == 1.25);
        REQUIRE(m.rsrpDbm.size() == 4);
        for (double r : m.rsrpDbm)
        {
            CHECK(std::isfinite(r));
        }
        CHECK(m.servingSinrDb == doctest::Approx(SinrFromRsrpDbm(m.rsrpDbm, 2, p.noiseFloorDbm)));
    }
}
