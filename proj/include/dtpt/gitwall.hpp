#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtpt/poly.hpp"

namespace dtpt {

// Pair of linearisation coefficients bracketing the wall: 0 < c0 < 1/r < c1,
// with r the multiplicity of the ambient sheaf.
struct LinPair {
    Rat c0;
    Rat c1;
    long r = 1;

    LinPair(Rat c0_, Rat c1_, long r_);
    Rat coefficient(int which) const { return which == 0 ? c0 : c1; }
    // interpolated coefficient (1-t) c0 + t c1
    Rat coefficient_at(const Rat& t) const { return (1 - t) * c0 + t * c1; }
};

// Numerical shadow of a destabilising subspace V' of V = H^0(F(m)): the
// multiplicities and Euler characteristics of F and the subsheaf F'
// generated by V', the dimension of V', and whether the section line meets
// V' (dim Phi' jumps at most once along a filtration, so it is 0 or 1).
struct SubspaceData {
    long m = 0;
    long r = 1;
    long chiF = 0;
    long rp = 0;
    long chiFp = 0;
    long dimVp = 1;
    int dimPhiP = 0;

    long dimV() const { return r * m + chiF; }
    void validate() const;

    nlohmann::json to_json() const;
    static SubspaceData from_json(const nlohmann::json& j, long m, long r, long chiF);
};

// Weights are linear polynomials in the embedding twist l.
using WeightPoly = Poly;

// mu^i(V') = dimV (c_i P_{F'}(l) - dimPhi' l) - dimV' (c_i P_F(l) - l),
// with P_F(l) = r l + chiF and P_{F'}(l) = r' l + chiF'.
WeightPoly mu_weight(const SubspaceData& sd, int which, const LinPair& lp);

// Same weight for an arbitrary linearisation coefficient c (used to check
// that the weight is affine in the interpolation parameter).
WeightPoly mu_weight_c(const SubspaceData& sd, const Rat& c, const LinPair& lp);

// One layer of a weight filtration of (V, F, Phi).
struct FiltrationLayer {
    long dimV = 0;
    long rF = 0;
    long chiF = 0;
    int dimPhi = 0;
};

struct FiltrationData {
    long m = 0;
    long r = 1;
    long chiF = 0;
    std::vector<FiltrationLayer> layers; // cumulative, weakly increasing; top = whole space

    void validate() const;
};

// Hilbert-Mumford weight of the filtration: the displayed sum over layers,
// divided by dim V. For a two-step filtration this is mu_weight / dimV.
WeightPoly hm_weight_filtration(const FiltrationData& f, int which, const LinPair& lp);

// Either a concrete rational value of l or the l >> 0 regime, where signs
// are decided by the leading coefficient with the constant as tie-break.
struct LValue {
    bool asymptotic = true;
    Rat value;

    static LValue at(Rat v) { return {false, std::move(v)}; }
    static LValue infinity() { return {true, Rat(0)}; }
};

int weight_sign(const WeightPoly& w, const LValue& l);

// The critical interpolation parameter: the unique t in (0,1) with
// (1-t) mu0 + t mu1 = 0. Requires mu0 mu1 < 0 at the given l.
Rat critical_t(const SubspaceData& sd, const LinPair& lp, const Rat& l);
// Symbolic version, a rational function of l.
RatFun critical_t_symbolic(const SubspaceData& sd, const LinPair& lp);

// The closed-form ratio mu0/mu1 = (rmc0 - (c0 r - 1)l)/(rmc1 - (c1 r - 1)l)
// that makes the wall independent of the destabilising data.
RatFun universal_ratio(const LinPair& lp, long m);

// The two destabilising families (with the section-count equalities):
//   family 1: F' 0-dimensional, dimPhi' = 0, dimV' = chiF'
//   family 2: F' of full multiplicity, dimPhi' = 1, dimV' = rm + chiF'
SubspaceData family1_member(long m, long r, long chiF, long chiFp);
SubspaceData family2_member(long m, long r, long chiF, long chiFp);
bool in_family1(const SubspaceData& sd);
bool in_family2(const SubspaceData& sd);

struct TStarReport {
    bool pass = false;
    long family1_checked = 0;
    long family2_checked = 0;
    long outside_scanned = 0;
    std::string message;
    nlohmann::json detail;

    nlohmann::json to_json() const;
};

// Verifies, symbolically in l, that mu0/mu1 equals the closed form for
// every family member over the given chiF' ranges, and scans the whole
// saturated grid for opposite-sign data outside the two families (none may
// exist). chi_range bounds |chiF'| in the outside scan.
TStarReport verify_tstar_universal(const LinPair& lp, long m, long chiF, long family_size,
                                   long chi_range);

enum class Stability { stable, strictly_semistable, unstable };

const char* to_string(Stability s);

// Sign of min over the config of (1-t) mu0 + t mu1: positive => stable,
// zero => strictly semistable, negative => unstable. The empty config is
// stable (no destabilisers).
Stability classify(const std::vector<SubspaceData>& config, const LinPair& lp, const Rat& t,
                   const LValue& l);

struct WallScan {
    std::vector<Rat> walls;
    std::vector<std::pair<Rat, Stability>> samples;

    nlohmann::json to_json() const;
};

// The exact set of t in (0,1) where some member's interpolated weight
// changes sign, plus classifications on a (resolution+1)-point sample grid.
WallScan chamber_scan(const std::vector<SubspaceData>& config, const LinPair& lp,
                      int resolution, const LValue& l);

// Scenario file: {"r":..,"m":..,"chiF":..,"c0":"1/4","c1":"1","l":"101"|"asymptotic",
//                 "resolution":..,"config":[{"rp":..,"chiFp":..,"dimVp":..,"dimPhiP":..},..]}
nlohmann::json run_scenario(const nlohmann::json& scenario);

} // namespace dtpt
