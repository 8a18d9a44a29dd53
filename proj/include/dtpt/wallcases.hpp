#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtpt/qrat.hpp"

namespace dtpt {

using Assignment = std::map<std::string, long>;

// Integer-coefficient linear form in named parameters plus a constant.
struct LinForm {
    std::map<std::string, long> coeffs;
    long constant = 0;

    static LinForm var(const std::string& name, long c = 1) {
        LinForm f;
        f.coeffs[name] = c;
        return f;
    }
    static LinForm of(long c) {
        LinForm f;
        f.constant = c;
        return f;
    }

    long eval(const Assignment& a) const;

    friend LinForm operator+(LinForm a, const LinForm& b);
    friend LinForm operator-(LinForm a, const LinForm& b);
    friend LinForm operator*(long s, LinForm a);
    friend LinForm operator+(LinForm a, long c) { a.constant += c; return a; }
    friend LinForm operator-(LinForm a, long c) { a.constant -= c; return a; }

    std::string to_string() const;
};

// Formal expression in q: rational constants, monomials q^L with L a
// linear form in the parameters, parameter values themselves as scalars,
// termwise geometric ranges sum_{i=from}^{to} q^i, and +,-,*,/.
//
// A geometric range evaluates by literally adding up its terms, never via
// the closed form, so closed forms can be tested against it.
class ParamExpr {
public:
    static ParamExpr constant(Rat c);
    static ParamExpr constant(long c) { return constant(Rat(c)); }
    static ParamExpr q_pow(LinForm exponent);
    static ParamExpr q() { return q_pow(LinForm::of(1)); }
    static ParamExpr value(LinForm form);
    static ParamExpr geom_range(LinForm from, LinForm to);

    friend ParamExpr operator+(const ParamExpr& a, const ParamExpr& b);
    friend ParamExpr operator-(const ParamExpr& a, const ParamExpr& b);
    friend ParamExpr operator*(const ParamExpr& a, const ParamExpr& b);
    friend ParamExpr operator/(const ParamExpr& a, const ParamExpr& b);
    ParamExpr operator-() const;

    // Exact evaluation; throws std::domain_error on division by zero.
    QRat eval(const Assignment& a) const;

    struct Node; // defined in the implementation

private:
    std::shared_ptr<const Node> node_;
};

enum class Cmp { eq, ne, lt, le, gt, ge };

// Finite evaluation domain: free parameters with inclusive integer ranges,
// derived parameters given by linear forms in earlier ones, and linear
// inequality filters.
class GridSpec {
public:
    GridSpec& param(const std::string& name, long lo, long hi);
    GridSpec& derived(const std::string& name, LinForm form);
    GridSpec& filter(LinForm lhs, Cmp op, LinForm rhs);

    void for_each(const std::function<void(const Assignment&)>& fn) const;
    std::vector<Assignment> points() const;
    long size() const;

    nlohmann::json to_json() const;

private:
    struct FreeParam {
        std::string name;
        long lo, hi;
    };
    struct DerivedParam {
        std::string name;
        LinForm form;
    };
    struct Filter {
        LinForm lhs;
        Cmp op;
        LinForm rhs;
    };
    std::vector<FreeParam> free_;
    std::vector<DerivedParam> derived_;
    std::vector<Filter> filters_;
};

struct EqResult {
    bool equal = false;
    long points_checked = 0;
    std::optional<Assignment> witness;       // first counterexample
    std::optional<std::string> eval_error;   // division by zero etc., with the assignment

    nlohmann::json to_json() const;
};

// True iff a = b as exact rational functions of q at every grid point.
EqResult expr_equal(const ParamExpr& a, const ParamExpr& b, const GridSpec& grid,
                    bool parallel = false);

struct IdentityReport {
    std::string name;
    bool pass = false;
    long points = 0;
    nlohmann::json grid;
    nlohmann::json detail;

    nlohmann::json to_json() const;
};

// The three length-2 fiber Serre-polynomial formulas, each checked against
// its termwise expansion and its q -> 1 Euler-characteristic limit.
IdentityReport serre_case_a(const GridSpec& grid);
IdentityReport serre_case_b(const GridSpec& grid);
IdentityReport serre_case_c(const GridSpec& grid);

// Integer Euler-characteristic differences of the three length-2 cases
// under the ledger constraints h = e + 1 (points) and h_2x = e_2x + 2.
IdentityReport euler_diffs_len2(const GridSpec& grid);

// The inclusion-exclusion reordering: the one-extension Hall term splits
// into a zero-extension part that re-appears inside the case (a)/(b)
// formulas and a nonzero-extension part matching the punctual case (c)
// scaled by the plane of length-2 structures; each raw Hall term has a
// genuine pole at q = 1, which is asserted too.
IdentityReport reorder_check(const GridSpec& grid);

GridSpec default_grid_case_a();
GridSpec default_grid_case_b();
GridSpec default_grid_case_c();
GridSpec default_grid_euler_diffs();
GridSpec default_grid_reorder();

// Formal polynomial in the symbols e(X), e(Hilb^2 X), P_{1,C}.
struct SymPoly {
    // exponent triple (eX, eHilb2X, P1C) -> coefficient
    std::map<std::array<int, 3>, Rat> terms;

    static SymPoly symbol_eX();
    static SymPoly symbol_eHilb2X();
    static SymPoly symbol_P1C();
    static SymPoly constant(const Rat& c);

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms == b.terms; }

    Rat specialize(const Rat& eX, const Rat& eHilb2X, const Rat& P1C) const;
    std::string to_string() const;
};

struct AssembleReport {
    bool ok = false;
    SymPoly result;
    std::vector<std::string> trace;
    std::string message;

    nlohmann::json to_json() const;
};

// Assembles the three verified length-2 differences into the two-point
// identity by the four-rule weighted-Euler-characteristic calculus:
// scissor additivity over the strata {x != y}, {diagonal}, {punctual},
// double-cover symmetrisation, integral of e_x over X defined as P_{1,C},
// and stratum-wise integrals of 1 over Hilb^2 defined as e(Hilb^2 X).
AssembleReport assemble_two_point();

} // namespace dtpt
