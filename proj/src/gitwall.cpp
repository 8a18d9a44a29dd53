#include "dtpt/gitwall.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dtpt {

LinPair::LinPair(Rat c0_, Rat c1_, long r_) : c0(std::move(c0_)), c1(std::move(c1_)), r(r_) {
    if (r < 1) throw std::invalid_argument("multiplicity r must be positive");
    Rat inv_r = rat(1, r);
    if (!(0 < c0 && c0 < inv_r && inv_r < c1))
        throw std::invalid_argument("linearisation pair must satisfy 0 < c0 < 1/r < c1");
}

void SubspaceData::validate() const {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (rp < 0 || rp > r) throw std::invalid_argument("0 <= r' <= r violated");
    if (dimPhiP != 0 && dimPhiP != 1) throw std::invalid_argument("dim Phi' must be 0 or 1");
    if (!(0 < dimVp && dimVp < dimV()))
        throw std::invalid_argument("0 < dim V' < dim V violated");
}

nlohmann::json SubspaceData::to_json() const {
    return nlohmann::json{{"rp", rp}, {"chiFp", chiFp}, {"dimVp", dimVp}, {"dimPhiP", dimPhiP}};
}

SubspaceData SubspaceData::from_json(const nlohmann::json& j, long m, long r, long chiF) {
    SubspaceData sd;
    sd.m = m;
    sd.r = r;
    sd.chiF = chiF;
    sd.rp = j.at("rp").get<long>();
    sd.chiFp = j.at("chiFp").get<long>();
    sd.dimVp = j.at("dimVp").get<long>();
    sd.dimPhiP = j.at("dimPhiP").get<int>();
    sd.validate();
    return sd;
}

WeightPoly mu_weight_c(const SubspaceData& sd, const Rat& c, const LinPair& lp) {
    sd.validate();
    if (sd.r != lp.r) throw std::invalid_argument("multiplicity mismatch with linearisation pair");
    Rat dimV(sd.dimV());
    Rat dimVp(sd.dimVp);
    Rat slope = dimV * (c * sd.rp - sd.dimPhiP) - dimVp * (c * sd.r - 1);
    Rat constant = c * (dimV * sd.chiFp - dimVp * sd.chiF);
    return Poly(std::vector<Rat>{constant, slope});
}

WeightPoly mu_weight(const SubspaceData& sd, int which, const LinPair& lp) {
    if (which != 0 && which != 1) throw std::invalid_argument("which must be 0 or 1");
    return mu_weight_c(sd, lp.coefficient(which), lp);
}

void FiltrationData::validate() const {
    if (layers.empty()) throw std::invalid_argument("filtration needs at least one layer");
    for (size_t i = 0; i < layers.size(); ++i) {
        const auto& a = layers[i];
        if (a.dimPhi != 0 && a.dimPhi != 1)
            throw std::invalid_argument("dim Phi_{<=k} can only be 0 or 1");
        if (i > 0) {
            const auto& prev = layers[i - 1];
            if (a.dimV < prev.dimV || a.rF < prev.rF || a.dimPhi < prev.dimPhi)
                throw std::invalid_argument("filtration must be weakly increasing");
        }
    }
    const auto& top = layers.back();
    if (top.dimV != r * m + chiF || top.rF != r || top.chiF != chiF || top.dimPhi != 1)
        throw std::invalid_argument("top layer must be the whole space");
}

WeightPoly hm_weight_filtration(const FiltrationData& f, int which, const LinPair& lp) {
    f.validate();
    if (f.r != lp.r) throw std::invalid_argument("multiplicity mismatch with linearisation pair");
    Rat c = lp.coefficient(which);
    Rat dimV(f.r * f.m + f.chiF);
    Rat slope(0), constant(0);
    for (const auto& layer : f.layers) {
        // dimV (c P_{F<=k}(l) - dimPhi_{<=k} l) - dimV_{<=k} (c P_F(l) - l)
        slope += dimV * (c * layer.rF - layer.dimPhi) - Rat(layer.dimV) * (c * f.r - 1);
        constant += c * (dimV * layer.chiF - Rat(layer.dimV) * f.chiF);
    }
    return Poly(std::vector<Rat>{constant / dimV, slope / dimV});
}

int weight_sign(const WeightPoly& w, const LValue& l) {
    if (!l.asymptotic) return sign(w.eval(l.value));
    if (w.coeff(1) != 0) return sign(w.coeff(1));
    return sign(w.coeff(0));
}

Rat critical_t(const SubspaceData& sd, const LinPair& lp, const Rat& l) {
    Rat mu0 = mu_weight(sd, 0, lp).eval(l);
    Rat mu1 = mu_weight(sd, 1, lp).eval(l);
    if (sign(mu0) * sign(mu1) >= 0)
        throw std::domain_error("no wall: weights do not have opposite signs at this l");
    return mu0 / (mu0 - mu1);
}

RatFun critical_t_symbolic(const SubspaceData& sd, const LinPair& lp) {
    WeightPoly mu0 = mu_weight(sd, 0, lp);
    WeightPoly mu1 = mu_weight(sd, 1, lp);
    if (weight_sign(mu0, LValue::infinity()) * weight_sign(mu1, LValue::infinity()) >= 0)
        throw std::domain_error("no wall: weights do not have opposite asymptotic signs");
    return RatFun(mu0, mu0 - mu1);
}

RatFun universal_ratio(const LinPair& lp, long m) {
    Rat rm(lp.r * m);
    Poly num(std::vector<Rat>{rm * lp.c0, -(lp.c0 * lp.r - 1)});
    Poly den(std::vector<Rat>{rm * lp.c1, -(lp.c1 * lp.r - 1)});
    return RatFun(num, den);
}

SubspaceData family1_member(long m, long r, long chiF, long chiFp) {
    SubspaceData sd;
    sd.m = m;
    sd.r = r;
    sd.chiF = chiF;
    sd.rp = 0;
    sd.chiFp = chiFp;
    sd.dimVp = chiFp;
    sd.dimPhiP = 0;
    sd.validate();
    return sd;
}

SubspaceData family2_member(long m, long r, long chiF, long chiFp) {
    SubspaceData sd;
    sd.m = m;
    sd.r = r;
    sd.chiF = chiF;
    sd.rp = r;
    sd.chiFp = chiFp;
    sd.dimVp = r * m + chiFp;
    sd.dimPhiP = 1;
    if (chiFp >= chiF)
        throw std::invalid_argument("family 2 needs a proper subsheaf: chiF' < chiF");
    sd.validate();
    return sd;
}

bool in_family1(const SubspaceData& sd) {
    return sd.rp == 0 && sd.dimPhiP == 0 && sd.dimVp == sd.chiFp;
}

bool in_family2(const SubspaceData& sd) {
    return sd.rp == sd.r && sd.dimPhiP == 1 && sd.dimVp == sd.r * sd.m + sd.chiFp &&
           sd.chiFp < sd.chiF;
}

nlohmann::json TStarReport::to_json() const {
    return nlohmann::json{{"pass", pass},
                          {"family1_checked", family1_checked},
                          {"family2_checked", family2_checked},
                          {"outside_scanned", outside_scanned},
                          {"message", message},
                          {"detail", detail}};
}

TStarReport verify_tstar_universal(const LinPair& lp, long m, long chiF, long family_size,
                                   long chi_range) {
    TStarReport rep;
    RatFun closed = universal_ratio(lp, m);

    auto ratio_of = [&](const SubspaceData& sd) {
        return RatFun(mu_weight(sd, 0, lp), Poly(Rat(1))) /
               RatFun(mu_weight(sd, 1, lp), Poly(Rat(1)));
    };

    for (long chiFp = 1; chiFp <= family_size; ++chiFp) {
        SubspaceData sd = family1_member(m, lp.r, chiF, chiFp);
        if (!(ratio_of(sd) == closed)) {
            rep.message = "family-1 member deviates from the closed form";
            rep.detail = sd.to_json();
            return rep;
        }
        WeightPoly mu0 = mu_weight(sd, 0, lp);
        WeightPoly mu1 = mu_weight(sd, 1, lp);
        if (weight_sign(mu0, LValue::infinity()) * weight_sign(mu1, LValue::infinity()) != -1) {
            rep.message = "family-1 member is not a wall-crosser";
            rep.detail = sd.to_json();
            return rep;
        }
        ++rep.family1_checked;
    }

    for (long chiFp = chiF - family_size; chiFp < chiF; ++chiFp) {
        if (lp.r * m + chiFp < 1) continue;
        SubspaceData sd = family2_member(m, lp.r, chiF, chiFp);
        if (!(ratio_of(sd) == closed)) {
            rep.message = "family-2 member deviates from the closed form";
            rep.detail = sd.to_json();
            return rep;
        }
        WeightPoly mu0 = mu_weight(sd, 0, lp);
        WeightPoly mu1 = mu_weight(sd, 1, lp);
        if (weight_sign(mu0, LValue::infinity()) * weight_sign(mu1, LValue::infinity()) != -1) {
            rep.message = "family-2 member is not a wall-crosser";
            rep.detail = sd.to_json();
            return rep;
        }
        ++rep.family2_checked;
    }

    // Saturated data outside the two families must never have weights of
    // opposite asymptotic sign; this is a scan, not an assumption.
    for (long rp = 0; rp <= lp.r; ++rp) {
        for (int phi = 0; phi <= 1; ++phi) {
            for (long chiFp = -chi_range; chiFp <= chi_range; ++chiFp) {
                SubspaceData sd;
                sd.m = m;
                sd.r = lp.r;
                sd.chiF = chiF;
                sd.rp = rp;
                sd.chiFp = chiFp;
                sd.dimVp = rp * m + chiFp; // section count of the saturation
                sd.dimPhiP = phi;
                if (sd.dimVp <= 0 || sd.dimVp >= sd.dimV()) continue;
                if (rp == sd.r && chiFp >= chiF) continue; // not a proper subsheaf
                if (in_family1(sd) || in_family2(sd)) continue;
                ++rep.outside_scanned;
                WeightPoly mu0 = mu_weight(sd, 0, lp);
                WeightPoly mu1 = mu_weight(sd, 1, lp);
                if (weight_sign(mu0, LValue::infinity()) * weight_sign(mu1, LValue::infinity()) <
                    0) {
                    rep.message = "opposite-sign data outside both families";
                    rep.detail = sd.to_json();
                    return rep;
                }
            }
        }
    }

    rep.pass = rep.family1_checked > 0 && rep.family2_checked > 0;
    if (!rep.pass) rep.message = "empty family grid";
    return rep;
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::strictly_semistable: return "strictly-semistable";
        case Stability::unstable: return "unstable";
    }
    return "?";
}

namespace {

WeightPoly interpolated_weight(const SubspaceData& sd, const LinPair& lp, const Rat& t) {
    WeightPoly mu0 = mu_weight(sd, 0, lp);
    WeightPoly mu1 = mu_weight(sd, 1, lp);
    return (1 - t) * mu0 + t * mu1;
}

} // namespace

Stability classify(const std::vector<SubspaceData>& config, const LinPair& lp, const Rat& t,
                   const LValue& l) {
    if (t < 0 || t > 1) throw std::invalid_argument("t must lie in [0,1]");
    int min_sign = 1;
    for (const auto& sd : config)
        min_sign = std::min(min_sign, weight_sign(interpolated_weight(sd, lp, t), l));
    if (min_sign > 0) return Stability::stable;
    if (min_sign == 0) return Stability::strictly_semistable;
    return Stability::unstable;
}

nlohmann::json WallScan::to_json() const {
    nlohmann::json walls_j = nlohmann::json::array();
    for (const auto& w : walls) walls_j.push_back(rat_to_string(w));
    nlohmann::json samples_j = nlohmann::json::array();
    for (const auto& [t, s] : samples)
        samples_j.push_back({{"t", rat_to_string(t)}, {"status", to_string(s)}});
    return nlohmann::json{{"walls", walls_j}, {"samples", samples_j}};
}

WallScan chamber_scan(const std::vector<SubspaceData>& config, const LinPair& lp, int resolution,
                      const LValue& l) {
    WallScan scan;
    std::set<Rat> walls;
    for (const auto& sd : config) {
        WeightPoly mu0 = mu_weight(sd, 0, lp);
        WeightPoly mu1 = mu_weight(sd, 1, lp);
        // weight at parameter t is (1-t) mu0 + t mu1, linear in t for the
        // chosen sign convention; collect the root when the endpoint signs
        // genuinely differ
        int s0 = weight_sign(mu0, l);
        int s1 = weight_sign(mu1, l);
        if (s0 * s1 >= 0) continue;
        Rat root;
        if (!l.asymptotic) {
            Rat a = mu0.eval(l.value), b = mu1.eval(l.value);
            root = a / (a - b);
        } else {
            Rat a = mu0.coeff(1), b = mu1.coeff(1);
            if (a == b) continue;
            root = a / (a - b);
        }
        if (0 < root && root < 1) walls.insert(root);
    }
    scan.walls.assign(walls.begin(), walls.end());

    if (resolution > 0) {
        for (int k = 0; k <= resolution; ++k) {
            Rat t = rat(k, resolution);
            scan.samples.emplace_back(t, classify(config, lp, t, l));
        }
    }
    return scan;
}

nlohmann::json run_scenario(const nlohmann::json& scenario) {
    long r = scenario.at("r").get<long>();
    long m = scenario.at("m").get<long>();
    long chiF = scenario.value("chiF", 0L);
    LinPair lp(rat_from_string(scenario.at("c0").get<std::string>()),
               rat_from_string(scenario.at("c1").get<std::string>()), r);

    LValue l = LValue::infinity();
    if (scenario.contains("l") && scenario.at("l").is_string() &&
        scenario.at("l").get<std::string>() != "asymptotic")
        l = LValue::at(rat_from_string(scenario.at("l").get<std::string>()));

    std::vector<SubspaceData> config;
    for (const auto& j : scenario.value("config", nlohmann::json::array()))
        config.push_back(SubspaceData::from_json(j, m, r, chiF));

    int resolution = scenario.value("resolution", 8);
    WallScan scan = chamber_scan(config, lp, resolution, l);

    nlohmann::json out = scan.to_json();
    out["r"] = r;
    out["m"] = m;
    out["chiF"] = chiF;
    out["l"] = l.asymptotic ? "asymptotic" : rat_to_string(l.value);
    return out;
}

} // namespace dtpt
