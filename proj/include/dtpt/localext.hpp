#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtpt/exact_linalg.hpp"
#include "dtpt/partitions.hpp"

namespace dtpt {

// Sparse polynomial in three variables over Rat; exponent triples map to
// coefficients. Only needed to hold resolution differentials (signed
// monomials, or their expansions after translating the support point).
class Poly3 {
public:
    using Exp = std::array<int, 3>;

    Poly3() = default;
    static Poly3 constant(const Rat& c);
    static Poly3 monomial(const Rat& c, Exp e);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, Rat>& terms() const { return terms_; }

    friend Poly3 operator+(const Poly3& a, const Poly3& b);
    friend Poly3 operator-(const Poly3& a, const Poly3& b);
    friend Poly3 operator*(const Poly3& a, const Poly3& b);
    friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }

    // Substitute x_i -> x_i + shift_i and re-expand.
    Poly3 shifted(const std::array<Rat, 3>& shift) const;

    std::string to_string() const;

private:
    void add_term(const Exp& e, const Rat& c);
    std::map<Exp, Rat> terms_;
};

// Monomial ideal in Q[x,y,z], stored by its minimal generators (exponent
// vectors). Accepts only generator sets that are pairwise non-dividing.
class MonIdeal {
public:
    using Exp = std::array<int, 3>;

    explicit MonIdeal(std::vector<Exp> generators);

    static MonIdeal from_strings(const std::vector<std::string>& monomials); // e.g. {"y","z"}

    // Intersection of two monomial ideals (generated by pairwise lcms,
    // then minimalised). Builds curve ideals for coordinate crosses.
    static MonIdeal intersect(const MonIdeal& a, const MonIdeal& b);

    const std::vector<Exp>& gens() const { return gens_; }
    size_t num_gens() const { return gens_.size(); }

    // True when every minimal monomial prime over the ideal is an axis
    // prime (two coordinate variables), i.e. the support is a union of
    // coordinate axes and the quotient is 1-dimensional.
    bool is_monomial_curve() const;

    bool contains_monomial(const Exp& e) const;
    long count_monomials_up_to_degree(int d) const;

    std::string to_string() const;

private:
    std::vector<Exp> gens_;
};

// Finite-length module over Q[x,y,z]: a rational vector space with three
// commuting nilpotent matrices giving the variable actions.
class FinMod {
public:
    FinMod(RatMatrix x, RatMatrix y, RatMatrix z);

    static FinMod skyscraper(); // O_x at the origin, length 1
    // Structure sheaf of the length-2 point doubled in direction v.
    static FinMod fat_point(const std::array<Rat, 3>& direction);
    // Quotient by an artinian monomial ideal, basis the staircase boxes.
    static FinMod from_staircase(const BoxSet& boxes);
    static FinMod direct_sum(const FinMod& a, const FinMod& b);

    int length() const { return dim_; }
    const RatMatrix& action(int var) const;

    // Evaluate a polynomial in the three actions.
    RatMatrix act(const Poly3& p) const;

private:
    int dim_;
    std::array<RatMatrix, 3> acts_;
};

// Free resolution of a monomial ideal: ranks f_0, f_1, ... and
// differentials d_k : F_k -> F_{k-1} as Poly3 matrices, with the
// augmentation F_0 -> I given by the generator row. d o d = 0 is checked
// on construction.
struct FreeRes {
    std::vector<int> ranks;
    std::vector<std::vector<std::vector<Poly3>>> diffs; // diffs[k-1][row][col] = entry of d_k
    std::vector<Poly3> augmentation;

    int length() const { return static_cast<int>(ranks.size()) - 1; }
    // Translate the resolved ideal by -p, keeping modules at the origin.
    FreeRes shifted(const std::array<Rat, 3>& point) const;
};

// Taylor complex of the generators (one basis element per nonempty subset).
// Not minimal, but a resolution, and Ext is resolution-independent.
FreeRes taylor_resolution(const MonIdeal& ideal);

// dim Hom(I, T) = dim ker(Hom(F_0,T) -> Hom(F_1,T)); resolution-level
// overloads exist because the dimensions must not depend on the resolution.
int hom_dim(const FreeRes& res, const FinMod& t);
int ext_dim(const FreeRes& res, const FinMod& t, int i = 1);
int hom_dim(const MonIdeal& ideal, const FinMod& t);
// dim of cohomology of Hom(F_.,T) at position i >= 1.
int ext_dim(const MonIdeal& ideal, const FinMod& t, int i = 1);
inline int ext1_dim(const MonIdeal& ideal, const FinMod& t) { return ext_dim(ideal, t, 1); }

// Same dimensions for the module supported at an arbitrary rational point,
// computed by translating the ideal.
int hom_dim_at(const MonIdeal& ideal, const FinMod& t, const std::array<Rat, 3>& point);
int ext_dim_at(const MonIdeal& ideal, const FinMod& t, const std::array<Rat, 3>& point, int i = 1);

struct RRReport {
    bool ok = false;
    std::string ideal;
    int length = 0;
    int hom = 0;
    int ext1 = 0;
    std::vector<int> higher_ext; // positions 2..len
    std::string message;

    nlohmann::json to_json() const;
};

// Checks hom - ext1 = length(T) and ext^i = 0 for i >= 2.
RRReport verify_rr(const MonIdeal& ideal, const FinMod& t);

struct DirectionSample {
    std::string label;
    std::array<Rat, 3> direction;
    int h2x = 0;
    int e2x = 0;
};

struct CaseProfile {
    bool ok = false;
    int hx = 0;
    int ex = 0;
    int hmx = 0;
    std::vector<DirectionSample> fixed_directions;
    std::vector<DirectionSample> generic_samples;
    bool generic_consistent = false;
    std::string message;

    nlohmann::json to_json() const;
};

// Length-2 profile at the origin: exact values at the three torus-fixed
// tangent directions, plus seeded random rational directions for the
// generic stratum (which must agree with each other; disagreement is
// reported, never averaged).
CaseProfile two_point_profile(const MonIdeal& ideal, int generic_samples = 3,
                              unsigned seed = 1);

} // namespace dtpt
