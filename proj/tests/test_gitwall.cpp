#include <doctest.h>

#include <random>

#include "dtpt/gitwall.hpp"

using namespace dtpt;

namespace {

SubspaceData example_sd() {
    // m=10, r=2, chiF=5 so dimV = 25; F' zero-dimensional of length 3
    SubspaceData sd;
    sd.m = 10;
    sd.r = 2;
    sd.chiF = 5;
    sd.rp = 0;
    sd.chiFp = 3;
    sd.dimVp = 3;
    sd.dimPhiP = 0;
    return sd;
}

const LinPair kPair{rat(1, 4), Rat(1), 2};

} // namespace

TEST_CASE("linearisation pair bounds") {
    CHECK_THROWS_AS(LinPair(rat(1, 2), Rat(2), 2), std::invalid_argument); // c0 = 1/r
    CHECK_THROWS_AS(LinPair(rat(-1, 4), Rat(2), 2), std::invalid_argument);
    CHECK_THROWS_AS(LinPair(rat(1, 4), rat(1, 3), 2), std::invalid_argument); // c1 < 1/r
    CHECK_NOTHROW(LinPair(rat(1, 4), Rat(1), 2));
}

TEST_CASE("mu weight by direct substitution") {
    // dimV (c0 chiF') - dimV' (c0 P_F(l) - l) = 75/4 + 3l/2 - 15/4 = 15 + (3/2) l
    WeightPoly w = mu_weight(example_sd(), 0, kPair);
    CHECK(w.coeff(0) == Rat(15));
    CHECK(w.coeff(1) == rat(3, 2));

    SubspaceData bad = example_sd();
    bad.dimVp = bad.dimV();
    CHECK_THROWS_AS(mu_weight(bad, 0, kPair), std::invalid_argument);

    // full-multiplicity subsheaf with the section line: slope (c_i r - 1)(dimV - dimV')
    SubspaceData full = example_sd();
    full.rp = full.r;
    full.chiFp = full.chiF;
    full.dimVp = full.dimV() - 1;
    full.dimPhiP = 1;
    for (int i : {0, 1}) {
        Rat c = kPair.coefficient(i);
        CHECK(mu_weight(full, i, kPair).coeff(1) == (c * full.r - 1) * Rat(full.dimV() - full.dimVp));
    }
}

TEST_CASE("weight is affine in the interpolated linearisation") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> t_num(0, 12);
    for (int iter = 0; iter < 20; ++iter) {
        SubspaceData sd = example_sd();
        sd.chiFp = static_cast<long>(rng() % 5);
        sd.dimVp = 1 + static_cast<long>(rng() % (sd.dimV() - 1));
        sd.rp = static_cast<long>(rng() % (sd.r + 1));
        sd.dimPhiP = static_cast<int>(rng() % 2);
        Rat t = rat(t_num(rng), 12);
        WeightPoly direct = mu_weight_c(sd, kPair.coefficient_at(t), kPair);
        WeightPoly interp = (1 - t) * mu_weight(sd, 0, kPair) + t * mu_weight(sd, 1, kPair);
        CHECK(direct == interp);
    }
}

TEST_CASE("filtration weight reduces to mu/dimV") {
    SubspaceData sd = example_sd();
    FiltrationData f;
    f.m = sd.m;
    f.r = sd.r;
    f.chiF = sd.chiF;
    f.layers = {{sd.dimVp, sd.rp, sd.chiFp, sd.dimPhiP},
                {sd.dimV(), sd.r, sd.chiF, 1}};
    for (int i : {0, 1}) {
        WeightPoly lhs = hm_weight_filtration(f, i, kPair);
        WeightPoly mu = mu_weight(sd, i, kPair);
        Rat dv(sd.dimV());
        CHECK(lhs == Poly(std::vector<Rat>{mu.coeff(0) / dv, mu.coeff(1) / dv}));
    }

    // trivial filtration: SL-normalisation kills the single layer
    FiltrationData trivial;
    trivial.m = sd.m;
    trivial.r = sd.r;
    trivial.chiF = sd.chiF;
    trivial.layers = {{sd.dimV(), sd.r, sd.chiF, 1}};
    for (int i : {0, 1}) CHECK(hm_weight_filtration(trivial, i, kPair).is_zero());
}

TEST_CASE("three-step filtration is the sum of its two-step weights") {
    SubspaceData a = example_sd(); // chiFp=3 layer
    SubspaceData b = example_sd();
    b.chiFp = 4;
    b.dimVp = 4;
    FiltrationData f;
    f.m = a.m;
    f.r = a.r;
    f.chiF = a.chiF;
    f.layers = {{a.dimVp, a.rp, a.chiFp, a.dimPhiP},
                {b.dimVp, b.rp, b.chiFp, b.dimPhiP},
                {a.dimV(), a.r, a.chiF, 1}};
    for (int i : {0, 1}) {
        WeightPoly sum = hm_weight_filtration(f, i, kPair);
        Rat dv(a.dimV());
        WeightPoly expect = mu_weight(a, i, kPair) + mu_weight(b, i, kPair);
        CHECK(sum == Poly(std::vector<Rat>{expect.coeff(0) / dv, expect.coeff(1) / dv}));
    }
}

TEST_CASE("critical t") {
    // symmetric weights: mu0 = -mu1 at l = 10 gives t* = 1/2
    LinPair lp(rat(1, 2), Rat(2), 1);
    SubspaceData sd = family1_member(2, 1, 0, 1);
    Rat mu0 = mu_weight(sd, 0, lp).eval(Rat(10));
    Rat mu1 = mu_weight(sd, 1, lp).eval(Rat(10));
    CHECK(mu0 == -mu1);
    CHECK(critical_t(sd, lp, Rat(10)) == rat(1, 2));

    // t* = (1 - mu1/mu0)^{-1}
    Rat t = critical_t(sd, lp, Rat(30));
    Rat m0 = mu_weight(sd, 0, lp).eval(Rat(30));
    Rat m1 = mu_weight(sd, 1, lp).eval(Rat(30));
    CHECK(t == 1 / (1 - m1 / m0));

    // same-sign weights: no wall between the chambers for this direction
    CHECK_THROWS_AS(critical_t(sd, lp, rat(1, 100)), std::domain_error);
}

TEST_CASE("symbolic critical t matches the closed form") {
    for (long chiFp : {1L, 2L, 5L}) {
        SubspaceData sd = family1_member(10, 2, 5, chiFp);
        RatFun ts = critical_t_symbolic(sd, kPair);
        RatFun R = universal_ratio(kPair, 10);
        // t* = mu0/(mu0 - mu1) = R/(R - 1) written on the ratio level
        RatFun expect = R / (R - RatFun(Rat(1)));
        CHECK(ts == expect);
    }
    for (long chiFp : {0L, 2L, 4L}) {
        SubspaceData sd = family2_member(10, 2, 5, chiFp);
        RatFun ts = critical_t_symbolic(sd, kPair);
        RatFun R = universal_ratio(kPair, 10);
        CHECK(ts == R / (R - RatFun(Rat(1))));
    }
}

TEST_CASE("t* universality across linearisation choices") {
    struct Choice {
        LinPair lp;
        long m, chiF;
    };
    std::vector<Choice> choices{{LinPair(rat(1, 4), Rat(1), 2), 100, 5},
                                {LinPair(rat(1, 3), Rat(3), 1), 120, -4},
                                {LinPair(rat(1, 7), rat(2, 5), 3), 150, 9}};
    long total1 = 0, total2 = 0;
    for (const auto& ch : choices) {
        TStarReport rep = verify_tstar_universal(ch.lp, ch.m, ch.chiF, 70, 40);
        CAPTURE(rep.message);
        CHECK(rep.pass);
        CHECK(rep.outside_scanned > 0);
        total1 += rep.family1_checked;
        total2 += rep.family2_checked;
    }
    CHECK(total1 >= 200);
    CHECK(total2 >= 200);
}

TEST_CASE("classification across the wall") {
    CHECK(classify({}, kPair, rat(1, 2), LValue::infinity()) == Stability::stable);

    SubspaceData f1 = family1_member(10, 2, 5, 3);
    Rat l(101);
    Rat tstar = critical_t(f1, kPair, l);
    CHECK(tstar == rat(37, 91));

    // single family-1 destabiliser: stable before the wall, unstable after
    std::vector<SubspaceData> config{f1};
    CHECK(classify(config, kPair, tstar - rat(1, 100), LValue::at(l)) == Stability::stable);
    CHECK(classify(config, kPair, tstar + rat(1, 100), LValue::at(l)) == Stability::unstable);
    CHECK(classify(config, kPair, tstar, LValue::at(l)) == Stability::strictly_semistable);

    // a mixed family config is strictly semistable exactly at t*
    std::vector<SubspaceData> mixed{f1, family1_member(10, 2, 5, 2),
                                    family2_member(10, 2, 5, 4), family2_member(10, 2, 5, 2)};
    CHECK(classify(mixed, kPair, tstar, LValue::at(l)) == Stability::strictly_semistable);
}

TEST_CASE("chamber scan finds the single wall") {
    std::vector<SubspaceData> mixed{family1_member(10, 2, 5, 3), family1_member(10, 2, 5, 1),
                                    family2_member(10, 2, 5, 4), family2_member(10, 2, 5, 0)};
    WallScan scan = chamber_scan(mixed, kPair, 4, LValue::at(Rat(101)));
    REQUIRE(scan.walls.size() == 1);
    CHECK(scan.walls[0] == rat(37, 91));

    CHECK(chamber_scan({}, kPair, 4, LValue::infinity()).walls.empty());

    // the wall moves with m but stays unique
    std::vector<Rat> locations;
    for (long m : {10L, 20L, 50L}) {
        std::vector<SubspaceData> config{family1_member(m, 2, 5, 3), family2_member(m, 2, 5, 4)};
        WallScan s = chamber_scan(config, kPair, 0, LValue::at(Rat(2001)));
        REQUIRE(s.walls.size() == 1);
        locations.push_back(s.walls[0]);
    }
    CHECK(locations[0] != locations[1]);
    CHECK(locations[1] != locations[2]);
}

TEST_CASE("section-line data of lower multiplicity never flips") {
    // dimPhi' = 1 with r' < r: both asymptotic weights are negative once m
    // dominates the Euler characteristics, so such data never crosses
    for (long rp = 1; rp < 3; ++rp)
        for (long chiFp = -4; chiFp <= 4; ++chiFp) {
            SubspaceData sd;
            sd.m = 40;
            sd.r = 3;
            sd.chiF = 5;
            sd.rp = rp;
            sd.chiFp = chiFp;
            sd.dimVp = rp * sd.m + chiFp;
            sd.dimPhiP = 1;
            LinPair lp(rat(1, 4), Rat(1), 3);
            int s0 = weight_sign(mu_weight(sd, 0, lp), LValue::infinity());
            int s1 = weight_sign(mu_weight(sd, 1, lp), LValue::infinity());
            CHECK(s0 < 0);
            CHECK(s0 * s1 > 0);
            CHECK(chamber_scan({sd}, lp, 0, LValue::infinity()).walls.empty());
        }
}

TEST_CASE("scenario json round trip") {
    nlohmann::json scenario{
        {"r", 2},
        {"m", 10},
        {"chiF", 5},
        {"c0", "1/4"},
        {"c1", "1"},
        {"l", "101"},
        {"resolution", 4},
        {"config",
         {{{"rp", 0}, {"chiFp", 3}, {"dimVp", 3}, {"dimPhiP", 0}},
          {{"rp", 2}, {"chiFp", 4}, {"dimVp", 24}, {"dimPhiP", 1}}}}};
    nlohmann::json out = run_scenario(scenario);
    REQUIRE(out["walls"].size() == 1);
    CHECK(out["walls"][0] == "37/91");
    CHECK(out["samples"].size() == 5);
}
