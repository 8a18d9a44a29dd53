#include "dtpt/series_io.hpp"

namespace dtpt {

namespace {

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr;
}

Poly poly_from_json(const Json& j) {
    std::vector<Rat> v;
    v.reserve(j.size());
    for (const auto& entry : j) v.push_back(rat_from_string(entry.get<std::string>()));
    return Poly(std::move(v));
}

} // namespace

Json qrat_to_json(const QRat& x) {
    return Json{{"num", poly_to_json(x.fun().num())}, {"den", poly_to_json(x.fun().den())}};
}

QRat qrat_from_json(const Json& j) {
    return QRat(RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den"))));
}

Json to_json(const TruncSeries<Rat>& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rat_to_string(c));
    return Json{{"var", s.var()}, {"trunc", s.trunc_order()}, {"coeffs", coeffs}};
}

Json to_json(const TruncSeries<QRat>& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(qrat_to_json(c));
    return Json{{"var", s.var()}, {"trunc", s.trunc_order()}, {"coeffs", coeffs}};
}

TruncSeries<Rat> rat_series_from_json(const Json& j) {
    const Json& arr = j.at("coeffs");
    std::vector<Rat> c;
    c.reserve(arr.size());
    for (const auto& entry : arr) c.push_back(rat_from_string(entry.get<std::string>()));
    TruncSeries<Rat> s(std::move(c), j.value("var", "t"));
    if (j.contains("trunc") && j.at("trunc").get<int>() != s.trunc_order())
        throw std::invalid_argument("series trunc field disagrees with coefficient count");
    return s;
}

TruncSeries<QRat> qrat_series_from_json(const Json& j) {
    const Json& arr = j.at("coeffs");
    std::vector<QRat> c;
    c.reserve(arr.size());
    for (const auto& entry : arr) c.push_back(qrat_from_json(entry));
    TruncSeries<QRat> s(std::move(c), j.value("var", "t"));
    if (j.contains("trunc") && j.at("trunc").get<int>() != s.trunc_order())
        throw std::invalid_argument("series trunc field disagrees with coefficient count");
    return s;
}

AnySeries any_series_from_json(const Json& j) {
    const Json& arr = j.at("coeffs");
    if (!arr.empty() && arr.front().is_object()) return AnySeries::of(qrat_series_from_json(j));
    return AnySeries::of(rat_series_from_json(j));
}

Json to_json(const AnySeries& s) {
    return s.ring == AnySeries::Ring::rational ? to_json(s.rat) : to_json(s.qrat);
}

AnySeries any_series_mul(const AnySeries& a, const AnySeries& b) {
    if (a.ring != b.ring)
        throw std::invalid_argument("coefficient-ring mismatch between series operands");
    if (a.ring == AnySeries::Ring::rational) return AnySeries::of(series_mul(a.rat, b.rat));
    return AnySeries::of(series_mul(a.qrat, b.qrat));
}

} // namespace dtpt
