#include "dtpt/localext.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dtpt {

// ---------------------------------------------------------------------------
// Poly3

Poly3 Poly3::constant(const Rat& c) { return monomial(c, {0, 0, 0}); }

Poly3 Poly3::monomial(const Rat& c, Exp e) {
    Poly3 p;
    p.add_term(e, c);
    return p;
}

void Poly3::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Poly3 operator+(const Poly3& a, const Poly3& b) {
    Poly3 r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Poly3 operator-(const Poly3& a, const Poly3& b) {
    Poly3 r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

Poly3 Poly3::shifted(const std::array<Rat, 3>& shift) const {
    Poly3 out;
    for (const auto& [e, c] : terms_) {
        Poly3 term = Poly3::constant(c);
        for (int v = 0; v < 3; ++v) {
            Exp unit{0, 0, 0};
            unit[static_cast<size_t>(v)] = 1;
            Poly3 base = Poly3::monomial(Rat(1), unit) + Poly3::constant(shift[static_cast<size_t>(v)]);
            for (int k = 0; k < e[static_cast<size_t>(v)]; ++k) term = term * base;
        }
        out = out + term;
    }
    return out;
}

std::string Poly3::to_string() const {
    if (terms_.empty()) return "0";
    static const char* vars[3] = {"x", "y", "z"};
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << (sign(c) < 0 ? " - " : " + ");
        else if (sign(c) < 0) out << "-";
        Rat a = abs(c);
        bool has_var = e[0] + e[1] + e[2] > 0;
        if (a != 1 || !has_var) out << rat_to_string(a);
        for (int v = 0; v < 3; ++v) {
            if (e[static_cast<size_t>(v)] == 0) continue;
            out << vars[v];
            if (e[static_cast<size_t>(v)] > 1) out << "^" << e[static_cast<size_t>(v)];
        }
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// MonIdeal

namespace {

bool divides(const MonIdeal::Exp& a, const MonIdeal::Exp& b) {
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

MonIdeal::Exp lcm_exp(const MonIdeal::Exp& a, const MonIdeal::Exp& b) {
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

std::vector<MonIdeal::Exp> minimalize(std::vector<MonIdeal::Exp> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<MonIdeal::Exp> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens)
            if (h != g && divides(h, g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

} // namespace

MonIdeal::MonIdeal(std::vector<Exp> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("monomial ideal needs at least one generator");
    for (const auto& g : gens_)
        if (g[0] < 0 || g[1] < 0 || g[2] < 0)
            throw std::invalid_argument("negative exponent in monomial generator");
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = 0; j < gens_.size(); ++j)
            if (i != j && divides(gens_[i], gens_[j]))
                throw std::invalid_argument("generators must be pairwise non-dividing");
}

MonIdeal MonIdeal::from_strings(const std::vector<std::string>& monomials) {
    std::vector<Exp> gens;
    for (const auto& m : monomials) {
        Exp e{0, 0, 0};
        size_t i = 0;
        while (i < m.size()) {
            char v = m[i];
            int idx = v == 'x' ? 0 : v == 'y' ? 1 : v == 'z' ? 2 : -1;
            if (idx < 0) throw std::invalid_argument("bad monomial: " + m);
            ++i;
            int exp = 1;
            if (i < m.size() && m[i] == '^') {
                ++i;
                exp = 0;
                while (i < m.size() && isdigit(m[i])) exp = exp * 10 + (m[i++] - '0');
            }
            e[static_cast<size_t>(idx)] += exp;
        }
        gens.push_back(e);
    }
    return MonIdeal(minimalize(std::move(gens)));
}

MonIdeal MonIdeal::intersect(const MonIdeal& a, const MonIdeal& b) {
    std::vector<Exp> gens;
    for (const auto& ga : a.gens_)
        for (const auto& gb : b.gens_) gens.push_back(lcm_exp(ga, gb));
    return MonIdeal(minimalize(std::move(gens)));
}

bool MonIdeal::is_monomial_curve() const {
    // Minimal primes of a monomial ideal are coordinate primes P_S with
    // S a minimal vertex cover of the generator supports.
    std::vector<int> covers; // bitmask subsets of {x,y,z} covering all generators
    for (int s = 0; s < 8; ++s) {
        bool covers_all = true;
        for (const auto& g : gens_) {
            bool hit = false;
            for (int v = 0; v < 3; ++v)
                if ((s >> v & 1) && g[static_cast<size_t>(v)] > 0) hit = true;
            if (!hit) { covers_all = false; break; }
        }
        if (covers_all) covers.push_back(s);
    }
    for (int s : covers) {
        bool minimal = true;
        for (int t : covers)
            if (t != s && (t & s) == t) minimal = false;
        if (minimal && __builtin_popcount(static_cast<unsigned>(s)) != 2) return false;
    }
    return !covers.empty();
}

bool MonIdeal::contains_monomial(const Exp& e) const {
    for (const auto& g : gens_)
        if (divides(g, e)) return true;
    return false;
}

long MonIdeal::count_monomials_up_to_degree(int d) const {
    long count = 0;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            for (int c = 0; a + b + c <= d; ++c)
                if (contains_monomial({a, b, c})) ++count;
    return count;
}

std::string MonIdeal::to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) out << ",";
        out << Poly3::monomial(Rat(1), gens_[i]).to_string();
    }
    out << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// FinMod

FinMod::FinMod(RatMatrix x, RatMatrix y, RatMatrix z) : dim_(x.rows()), acts_{x, y, z} {
    for (const auto& m : acts_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw std::invalid_argument("module actions must be square of equal size");
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (!(acts_[size_t(a)] * acts_[size_t(b)] == acts_[size_t(b)] * acts_[size_t(a)]))
                throw std::invalid_argument("module actions must commute");
    for (const auto& m : acts_) {
        RatMatrix p = RatMatrix::identity(dim_);
        for (int k = 0; k < dim_; ++k) p = p * m;
        if (!p.is_zero()) throw std::invalid_argument("module actions must be nilpotent");
    }
}

FinMod FinMod::skyscraper() {
    return FinMod(RatMatrix(1, 1), RatMatrix(1, 1), RatMatrix(1, 1));
}

FinMod FinMod::fat_point(const std::array<Rat, 3>& direction) {
    if (direction[0] == 0 && direction[1] == 0 && direction[2] == 0)
        throw std::invalid_argument("fat point needs a nonzero direction");
    std::array<RatMatrix, 3> acts{RatMatrix(2, 2), RatMatrix(2, 2), RatMatrix(2, 2)};
    for (int v = 0; v < 3; ++v) acts[size_t(v)].at(1, 0) = direction[size_t(v)];
    return FinMod(acts[0], acts[1], acts[2]);
}

FinMod FinMod::from_staircase(const BoxSet& boxes) {
    if (boxes.legs.count() != 0 || !boxes.valid())
        throw std::invalid_argument("staircase module needs a finite downward-closed box set");
    int d = static_cast<int>(boxes.boxes.size());
    if (d == 0) throw std::invalid_argument("staircase module must be nonzero");
    auto index_of = [&](int x, int y, int z) -> int {
        for (int i = 0; i < d; ++i) {
            const Point3& p = boxes.boxes[static_cast<size_t>(i)];
            if (p.x == x && p.y == y && p.z == z) return i;
        }
        return -1;
    };
    std::array<RatMatrix, 3> acts{RatMatrix(d, d), RatMatrix(d, d), RatMatrix(d, d)};
    for (int i = 0; i < d; ++i) {
        const Point3& p = boxes.boxes[static_cast<size_t>(i)];
        int tx = index_of(p.x + 1, p.y, p.z);
        int ty = index_of(p.x, p.y + 1, p.z);
        int tz = index_of(p.x, p.y, p.z + 1);
        if (tx >= 0) acts[0].at(tx, i) = 1;
        if (ty >= 0) acts[1].at(ty, i) = 1;
        if (tz >= 0) acts[2].at(tz, i) = 1;
    }
    return FinMod(acts[0], acts[1], acts[2]);
}

FinMod FinMod::direct_sum(const FinMod& a, const FinMod& b) {
    int d = a.dim_ + b.dim_;
    std::array<RatMatrix, 3> acts{RatMatrix(d, d), RatMatrix(d, d), RatMatrix(d, d)};
    for (int v = 0; v < 3; ++v) {
        for (int i = 0; i < a.dim_; ++i)
            for (int j = 0; j < a.dim_; ++j) acts[size_t(v)].at(i, j) = a.acts_[size_t(v)].at(i, j);
        for (int i = 0; i < b.dim_; ++i)
            for (int j = 0; j < b.dim_; ++j)
                acts[size_t(v)].at(a.dim_ + i, a.dim_ + j) = b.acts_[size_t(v)].at(i, j);
    }
    return FinMod(acts[0], acts[1], acts[2]);
}

const RatMatrix& FinMod::action(int var) const { return acts_[static_cast<size_t>(var)]; }

RatMatrix FinMod::act(const Poly3& p) const {
    RatMatrix out(dim_, dim_);
    for (const auto& [e, c] : p.terms()) {
        RatMatrix m = RatMatrix::identity(dim_);
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < e[static_cast<size_t>(v)]; ++k) m = m * acts_[static_cast<size_t>(v)];
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) out.at(i, j) += c * m.at(i, j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Taylor resolution

FreeRes taylor_resolution(const MonIdeal& ideal) {
    const auto& gens = ideal.gens();
    const int g = static_cast<int>(gens.size());
    if (g > 6) throw std::invalid_argument("Taylor complex guard: more than 6 generators");

    // basis of F_k: subsets of {0..g-1} of size k+1, in increasing bitmask order
    std::vector<std::vector<unsigned>> basis(static_cast<size_t>(g));
    for (unsigned s = 1; s < (1u << g); ++s)
        basis[static_cast<size_t>(__builtin_popcount(s) - 1)].push_back(s);

    auto lcm_of = [&](unsigned s) {
        MonIdeal::Exp e{0, 0, 0};
        for (int i = 0; i < g; ++i)
            if (s >> i & 1) e = lcm_exp(e, gens[static_cast<size_t>(i)]);
        return e;
    };

    FreeRes res;
    for (const auto& level : basis) res.ranks.push_back(static_cast<int>(level.size()));

    for (int k = 1; k < g; ++k) {
        const auto& dom = basis[static_cast<size_t>(k)];
        const auto& cod = basis[static_cast<size_t>(k - 1)];
        std::vector<std::vector<Poly3>> d(cod.size(), std::vector<Poly3>(dom.size()));
        for (size_t col = 0; col < dom.size(); ++col) {
            unsigned s = dom[col];
            MonIdeal::Exp ls = lcm_of(s);
            int pos = 0;
            for (int i = 0; i < g; ++i) {
                if (!(s >> i & 1)) continue;
                unsigned sub = s & ~(1u << i);
                MonIdeal::Exp lsub = lcm_of(sub);
                MonIdeal::Exp quot{ls[0] - lsub[0], ls[1] - lsub[1], ls[2] - lsub[2]};
                size_t row = static_cast<size_t>(
                    std::find(cod.begin(), cod.end(), sub) - cod.begin());
                d[row][col] = Poly3::monomial(pos % 2 == 0 ? Rat(1) : Rat(-1), quot);
                ++pos;
            }
        }
        res.diffs.push_back(std::move(d));
    }

    for (const auto& e : gens) res.augmentation.push_back(Poly3::monomial(Rat(1), e));

    // d o d = 0
    for (size_t k = 1; k < res.diffs.size(); ++k) {
        const auto& a = res.diffs[k - 1];
        const auto& b = res.diffs[k];
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b[0].size(); ++j) {
                Poly3 acc;
                for (size_t m = 0; m < b.size(); ++m) acc = acc + a[i][m] * b[m][j];
                if (!acc.is_zero()) throw std::logic_error("Taylor differentials do not compose to zero");
            }
    }
    return res;
}

FreeRes FreeRes::shifted(const std::array<Rat, 3>& point) const {
    std::array<Rat, 3> s{point[0], point[1], point[2]};
    FreeRes out;
    out.ranks = ranks;
    out.diffs = diffs;
    out.augmentation = augmentation;
    for (auto& level : out.diffs)
        for (auto& row : level)
            for (auto& entry : row) entry = entry.shifted(s);
    for (auto& entry : out.augmentation) entry = entry.shifted(s);
    return out;
}

// ---------------------------------------------------------------------------
// Hom/Ext via the Hom complex

namespace {

// Matrix of Hom(F_{k-1},T) -> Hom(F_k,T), phi -> phi o d_k, as a block
// matrix whose (col-block i, row-block j) is the action of d_k[i][j].
RatMatrix hom_complex_map(const FreeRes& res, const FinMod& t, int k) {
    int d = t.length();
    if (k < 1 || k > res.length()) return RatMatrix(0, res.ranks.empty() ? 0 : res.ranks[0] * d);
    const auto& diff = res.diffs[static_cast<size_t>(k - 1)];
    int r_from = res.ranks[static_cast<size_t>(k - 1)];
    int r_to = res.ranks[static_cast<size_t>(k)];
    RatMatrix m(r_to * d, r_from * d);
    for (int i = 0; i < r_from; ++i)
        for (int j = 0; j < r_to; ++j) {
            const Poly3& entry = diff[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (entry.is_zero()) continue;
            RatMatrix blk = t.act(entry);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    m.at(j * d + a, i * d + b) += blk.at(a, b);
        }
    return m;
}

int hom_dim_res(const FreeRes& res, const FinMod& t) {
    int d = t.length();
    if (res.length() == 0) return res.ranks[0] * d; // principal ideal: Hom(R,T) = T
    RatMatrix m1 = hom_complex_map(res, t, 1);
    return kernel_dim(m1);
}

int ext_dim_res(const FreeRes& res, const FinMod& t, int i) {
    if (i < 1) throw std::invalid_argument("ext position must be >= 1");
    int d = t.length();
    if (i > res.length()) return 0; // complex has ended; Ext vanishes beyond pd
    RatMatrix into = hom_complex_map(res, t, i);        // image lands in Hom(F_i,T)
    int ker;
    if (i + 1 <= res.length()) {
        RatMatrix out = hom_complex_map(res, t, i + 1);
        ker = kernel_dim(out);
    } else {
        ker = res.ranks[static_cast<size_t>(i)] * d;
    }
    return ker - rank(into);
}

} // namespace

int hom_dim(const FreeRes& res, const FinMod& t) { return hom_dim_res(res, t); }

int ext_dim(const FreeRes& res, const FinMod& t, int i) { return ext_dim_res(res, t, i); }

int hom_dim(const MonIdeal& ideal, const FinMod& t) {
    return hom_dim_res(taylor_resolution(ideal), t);
}

int ext_dim(const MonIdeal& ideal, const FinMod& t, int i) {
    return ext_dim_res(taylor_resolution(ideal), t, i);
}

int hom_dim_at(const MonIdeal& ideal, const FinMod& t, const std::array<Rat, 3>& point) {
    return hom_dim_res(taylor_resolution(ideal).shifted({-point[0], -point[1], -point[2]}), t);
}

int ext_dim_at(const MonIdeal& ideal, const FinMod& t, const std::array<Rat, 3>& point, int i) {
    return ext_dim_res(taylor_resolution(ideal).shifted({-point[0], -point[1], -point[2]}), t, i);
}

nlohmann::json RRReport::to_json() const {
    return nlohmann::json{{"ok", ok},        {"ideal", ideal},   {"length", length},
                          {"hom", hom},      {"ext1", ext1},     {"higher_ext", higher_ext},
                          {"message", message}};
}

RRReport verify_rr(const MonIdeal& ideal, const FinMod& t) {
    RRReport rep;
    rep.ideal = ideal.to_string();
    rep.length = t.length();
    if (!ideal.is_monomial_curve()) {
        rep.message = "ideal is not a monomial curve ideal";
        return rep;
    }
    FreeRes res = taylor_resolution(ideal);
    rep.hom = hom_dim_res(res, t);
    rep.ext1 = ext_dim_res(res, t, 1);
    bool higher_ok = true;
    for (int i = 2; i <= res.length(); ++i) {
        int e = ext_dim_res(res, t, i);
        rep.higher_ext.push_back(e);
        if (e != 0) higher_ok = false;
    }
    rep.ok = (rep.hom - rep.ext1 == rep.length) && higher_ok;
    if (!rep.ok) {
        std::ostringstream msg;
        msg << "ledger failed for " << rep.ideal << ": hom=" << rep.hom << " ext1=" << rep.ext1
            << " length=" << rep.length;
        rep.message = msg.str();
    }
    return rep;
}

nlohmann::json CaseProfile::to_json() const {
    auto dir_json = [](const DirectionSample& s) {
        return nlohmann::json{{"label", s.label},
                              {"direction",
                               {rat_to_string(s.direction[0]), rat_to_string(s.direction[1]),
                                rat_to_string(s.direction[2])}},
                              {"h2x", s.h2x},
                              {"e2x", s.e2x}};
    };
    nlohmann::json fixed = nlohmann::json::array();
    for (const auto& s : fixed_directions) fixed.push_back(dir_json(s));
    nlohmann::json generic = nlohmann::json::array();
    for (const auto& s : generic_samples) generic.push_back(dir_json(s));
    return nlohmann::json{{"ok", ok},
                          {"hx", hx},
                          {"ex", ex},
                          {"hmx", hmx},
                          {"fixed", fixed},
                          {"generic", generic},
                          {"generic_consistent", generic_consistent},
                          {"message", message}};
}

CaseProfile two_point_profile(const MonIdeal& ideal, int generic_samples, unsigned seed) {
    CaseProfile profile;
    if (!ideal.is_monomial_curve()) {
        profile.message = "ideal is not a monomial curve ideal";
        return profile;
    }
    FreeRes res = taylor_resolution(ideal);
    FinMod point = FinMod::skyscraper();
    profile.hx = hom_dim_res(res, point);
    profile.ex = ext_dim_res(res, point, 1);
    // m_x of any length-2 structure is abstractly O_x
    profile.hmx = profile.hx;

    auto sample = [&](const std::string& label, const std::array<Rat, 3>& v) {
        FinMod t = FinMod::fat_point(v);
        DirectionSample s;
        s.label = label;
        s.direction = v;
        s.h2x = hom_dim_res(res, t);
        s.e2x = ext_dim_res(res, t, 1);
        return s;
    };

    profile.fixed_directions.push_back(sample("x", {Rat(1), Rat(0), Rat(0)}));
    profile.fixed_directions.push_back(sample("y", {Rat(0), Rat(1), Rat(0)}));
    profile.fixed_directions.push_back(sample("z", {Rat(0), Rat(0), Rat(1)}));

    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(1, 17);
    std::uniform_int_distribution<long> den(1, 5);
    for (int i = 0; i < generic_samples; ++i) {
        std::array<Rat, 3> v{rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                             rat(num(rng), den(rng))};
        profile.generic_samples.push_back(sample("generic" + std::to_string(i), v));
    }

    profile.generic_consistent = true;
    for (const auto& s : profile.generic_samples)
        if (s.h2x != profile.generic_samples[0].h2x || s.e2x != profile.generic_samples[0].e2x)
            profile.generic_consistent = false;
    if (!profile.generic_consistent) {
        profile.message = "random directions disagree: semicontinuity stratum ambiguity";
        return profile;
    }

    bool checks = (profile.hx - profile.ex == 1) && (profile.hmx - profile.ex == 1);
    for (const auto& s : profile.fixed_directions) checks = checks && (s.h2x - s.e2x == 2);
    for (const auto& s : profile.generic_samples) checks = checks && (s.h2x - s.e2x == 2);
    profile.ok = checks;
    if (!profile.ok) profile.message = "length-2 ledger failed";
    return profile;
}

} // namespace dtpt
