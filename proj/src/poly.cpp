#include "dtpt/poly.hpp"

#include <sstream>

#include "dtpt/qrat.hpp"

namespace dtpt {

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat c = coeff(i);
        if (c == 0) continue;
        if (!first) out << (sign(c) < 0 ? " - " : " + ");
        else if (sign(c) < 0) out << "-";
        Rat a = abs(c);
        if (a != 1 || i == 0) out << rat_to_string(a);
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

std::string RatFun::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::string QRat::to_string() const {
    // Even twice-exponents print in q directly; otherwise fall back to u = q^{1/2}.
    bool all_even = true;
    for (int i = 1; i <= fun().num().degree(); i += 2)
        if (fun().num().coeff(i) != 0) all_even = false;
    for (int i = 1; i <= fun().den().degree(); i += 2)
        if (fun().den().coeff(i) != 0) all_even = false;
    if (!all_even) return fun().to_string("q^(1/2)");

    auto halve = [](const Poly& p) {
        std::vector<Rat> v(static_cast<size_t>(p.degree() / 2) + 1, Rat(0));
        for (int i = 0; i <= p.degree(); i += 2) v[static_cast<size_t>(i / 2)] = p.coeff(i);
        return Poly(std::move(v));
    };
    if (fun().num().is_zero()) return "0";
    RatFun in_q(halve(fun().num()), halve(fun().den()));
    return in_q.to_string("q");
}

} // namespace dtpt
