#include <doctest.h>

#include <random>

#include "dtpt/localext.hpp"
#include "dtpt/partitions.hpp"

using namespace dtpt;

namespace {

const MonIdeal kAxis = MonIdeal::from_strings({"y", "z"});
const MonIdeal kTripleCross = MonIdeal::from_strings({"xy", "yz", "zx"});
const MonIdeal kPlaneCross = MonIdeal::intersect(MonIdeal::from_strings({"y", "z"}),
                                                 MonIdeal::from_strings({"x", "z"}));

// staircase modules of the given length, one per artinian monomial ideal
std::vector<FinMod> monomial_modules(int length) {
    std::vector<FinMod> mods;
    for (const auto& b : list_leg_configs(LegConfig::none(), length))
        mods.push_back(FinMod::from_staircase(b));
    return mods;
}

long count_binom3(int d) { // monomials in 3 variables of degree <= d
    if (d < 0) return 0;
    return static_cast<long>(d + 1) * (d + 2) * (d + 3) / 6;
}

// Independent count of monomials of degree <= D in the ideal via the
// subsets-of-generators inclusion-exclusion that Taylor exactness encodes.
long taylor_count(const MonIdeal& ideal, int D) {
    const auto& gens = ideal.gens();
    int g = static_cast<int>(gens.size());
    long total = 0;
    for (unsigned s = 1; s < (1u << g); ++s) {
        int deg = 0;
        MonIdeal::Exp l{0, 0, 0};
        for (int i = 0; i < g; ++i)
            if (s >> i & 1)
                for (int v = 0; v < 3; ++v)
                    l[size_t(v)] = std::max(l[size_t(v)], gens[size_t(i)][size_t(v)]);
        deg = l[0] + l[1] + l[2];
        long cnt = count_binom3(D - deg);
        total += (__builtin_popcount(s) % 2 == 1) ? cnt : -cnt;
    }
    return total;
}

} // namespace

TEST_CASE("cross ideal derived from intersecting axis ideals") {
    CHECK(kPlaneCross.gens() == std::vector<MonIdeal::Exp>{{0, 0, 1}, {1, 1, 0}});
    CHECK(kPlaneCross.is_monomial_curve());
}

TEST_CASE("monomial curve recognition") {
    CHECK(kAxis.is_monomial_curve());
    CHECK(kTripleCross.is_monomial_curve());
    CHECK_FALSE(MonIdeal::from_strings({"x"}).is_monomial_curve());        // plane
    CHECK_FALSE(MonIdeal::from_strings({"x", "y", "z"}).is_monomial_curve()); // point
    CHECK_FALSE(MonIdeal::from_strings({"xy", "xz"}).is_monomial_curve()); // plane + line
    CHECK_THROWS_AS(MonIdeal({{0, 1, 0}, {0, 2, 0}}), std::invalid_argument);
}

TEST_CASE("taylor resolution shapes") {
    auto koszul = taylor_resolution(kAxis);
    CHECK(koszul.ranks == std::vector<int>{2, 1});

    auto cross = taylor_resolution(kTripleCross);
    CHECK(cross.ranks == std::vector<int>{3, 3, 1}); // non-minimal

    auto principal = taylor_resolution(MonIdeal::from_strings({"x"}));
    CHECK(principal.ranks == std::vector<int>{1});
    CHECK(principal.length() == 0);
}

TEST_CASE("taylor complex is exact degree by degree") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> deg(3, 8);
    for (const MonIdeal* ideal : {&kAxis, &kTripleCross, &kPlaneCross}) {
        for (int iter = 0; iter < 3; ++iter) {
            int D = deg(rng);
            CHECK(taylor_count(*ideal, D) == ideal->count_monomials_up_to_degree(D));
        }
    }
    // a few random ideals as well
    std::uniform_int_distribution<int> e(0, 2);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<std::string> gens;
        for (int i = 0; i < 3; ++i) {
            std::string m;
            int a = e(rng), b = e(rng), c = e(rng);
            for (int k = 0; k < a; ++k) m += 'x';
            for (int k = 0; k < b; ++k) m += 'y';
            for (int k = 0; k < c; ++k) m += 'z';
            if (!m.empty()) gens.push_back(m);
        }
        if (gens.empty()) continue;
        MonIdeal ideal = MonIdeal::from_strings(gens);
        int D = deg(rng);
        CHECK(taylor_count(ideal, D) == ideal.count_monomials_up_to_degree(D));
    }
}

TEST_CASE("hom and ext of the smooth axis germ") {
    FinMod origin = FinMod::skyscraper();
    CHECK(hom_dim(kAxis, origin) == 2);
    CHECK(ext1_dim(kAxis, origin) == 1);

    // point off the curve: hom = length, ext = 0
    std::array<Rat, 3> off{Rat(0), Rat(1), Rat(0)};
    CHECK(hom_dim_at(kAxis, origin, off) == 1);
    CHECK(ext_dim_at(kAxis, origin, off, 1) == 0);
}

TEST_CASE("hom and ext of the triple cross") {
    FinMod origin = FinMod::skyscraper();
    CHECK(hom_dim(kTripleCross, origin) == 3);
    CHECK(ext1_dim(kTripleCross, origin) == 2);
    CHECK(ext_dim(kTripleCross, origin, 2) == 0);
}

TEST_CASE("hom and ext do not depend on the resolution") {
    // hand-coded Koszul complex for (y,z)
    FreeRes koszul;
    koszul.ranks = {2, 1};
    koszul.diffs = {{{Poly3::monomial(Rat(1), {0, 0, 1})},
                     {Poly3::monomial(Rat(-1), {0, 1, 0})}}};
    koszul.augmentation = {Poly3::monomial(Rat(1), {0, 1, 0}),
                           Poly3::monomial(Rat(1), {0, 0, 1})};
    auto taylor = taylor_resolution(kAxis);
    for (int len = 1; len <= 4; ++len)
        for (const auto& t : monomial_modules(len)) {
            CHECK(hom_dim(koszul, t) == hom_dim(taylor, t));
            CHECK(ext_dim(koszul, t, 1) == ext_dim(taylor, t, 1));
        }
}

TEST_CASE("riemann-roch ledger for the three curve model ideals") {
    for (const MonIdeal* ideal : {&kAxis, &kTripleCross, &kPlaneCross}) {
        for (int len = 1; len <= 5; ++len) {
            for (const auto& t : monomial_modules(len)) {
                RRReport rep = verify_rr(*ideal, t);
                CAPTURE(ideal->to_string());
                CAPTURE(len);
                CHECK(rep.ok);
                CHECK(rep.hom - rep.ext1 == len);
            }
        }
        // non-cyclic module: two copies of the origin point
        FinMod sq = FinMod::direct_sum(FinMod::skyscraper(), FinMod::skyscraper());
        CHECK(verify_rr(*ideal, sq).ok);
    }
}

TEST_CASE("off-curve modules see only their length") {
    std::array<Rat, 3> p{rat(5, 3), rat(-2, 7), Rat(4)};
    for (int len = 1; len <= 3; ++len)
        for (const auto& t : monomial_modules(len)) {
            CHECK(hom_dim_at(kAxis, t, p) == len);
            CHECK(ext_dim_at(kAxis, t, p, 1) == 0);
        }
}

TEST_CASE("two point profile of the smooth axis germ") {
    CaseProfile prof = two_point_profile(kAxis);
    CHECK(prof.ok);
    CHECK(prof.hx == 2);
    CHECK(prof.ex == 1);
    CHECK(prof.hmx == 2);
    REQUIRE(prof.fixed_directions.size() == 3);
    // doubling along the curve vs transverse: values jump, differences don't
    CHECK(prof.fixed_directions[0].h2x == 4);
    CHECK(prof.fixed_directions[0].e2x == 2);
    CHECK(prof.fixed_directions[1].h2x == 3);
    CHECK(prof.fixed_directions[1].e2x == 1);
    CHECK(prof.fixed_directions[2].h2x == 3);
    CHECK(prof.fixed_directions[2].e2x == 1);
    CHECK(prof.generic_consistent);
    CHECK(prof.generic_samples[0].h2x == 3);
    for (const auto& s : prof.fixed_directions) {
        CHECK(s.h2x - s.e2x == 2);
        CHECK((s.h2x - prof.hmx) - (s.e2x - prof.ex) == 1);
    }
}

TEST_CASE("two point profile of the triple cross") {
    CaseProfile prof = two_point_profile(kTripleCross);
    CHECK(prof.ok);
    CHECK(prof.hx == 3);
    CHECK(prof.ex == 2);
    for (const auto& s : prof.fixed_directions) CHECK(s.h2x - s.e2x == 2);
    CHECK(prof.generic_consistent);
}

// For a smooth germ the stable-pair fiber over n.p is a single reduced
// point: the unique pair whose cokernel is the length-n divisor n.p on the
// curve. Checked here for n <= 2 through the Ext ledger: at n=1 the pairs
// space is P(Ext^1) = P^0; at n=2 the split doubling contributes Gr(2,e_x)
// which is empty, doubling along the curve contributes e_2x - e_x = 1
// point, and every other direction contributes e_2x - e_x = 0.
TEST_CASE("smooth germ stable-pair fiber is one point for n <= 2") {
    CaseProfile prof = two_point_profile(kAxis);
    CHECK(prof.ex == 1);            // n=1: P(Ext^1) is a single point
    CHECK(prof.ex < 2);             // n=2 split case: Gr(2, e_x) empty
    const auto& along = prof.fixed_directions[0];
    CHECK(along.e2x - prof.ex == 1); // divisorial doubling: one pure extension
    CHECK(prof.fixed_directions[1].e2x - prof.ex == 0);
    CHECK(prof.fixed_directions[2].e2x - prof.ex == 0);
    CHECK(prof.generic_samples[0].e2x - prof.ex == 0);
}

TEST_CASE("reports serialize") {
    RRReport rep = verify_rr(kAxis, FinMod::skyscraper());
    auto j = rep.to_json();
    CHECK(j["ok"] == true);
    CHECK(j["hom"] == 2);
    auto pj = two_point_profile(kAxis).to_json();
    CHECK(pj["ok"] == true);
    CHECK(pj["fixed"].size() == 3);
}
