#pragma once

#include <json.hpp>

#include "dtpt/trunc_series.hpp"

namespace dtpt {

using Json = nlohmann::json;

// Series serialise as {"var":"t","trunc":N,"coeffs":[...]}.
// Rat coefficients are "num/den" strings (exact round-trip). QRat
// coefficients are {"num":[...],"den":[...]} coefficient arrays over the
// twice-exponent grid in q^{1/2}, each entry again a rational string.
Json to_json(const TruncSeries<Rat>& s);
Json to_json(const TruncSeries<QRat>& s);
Json qrat_to_json(const QRat& x);
QRat qrat_from_json(const Json& j);
TruncSeries<Rat> rat_series_from_json(const Json& j);
TruncSeries<QRat> qrat_series_from_json(const Json& j);

// Runtime-typed series for file I/O; arithmetic on mismatched coefficient
// rings is a reportable error rather than a compile failure.
struct AnySeries {
    enum class Ring { rational, qrational };
    Ring ring;
    TruncSeries<Rat> rat = TruncSeries<Rat>(0);
    TruncSeries<QRat> qrat = TruncSeries<QRat>(0);

    static AnySeries of(TruncSeries<Rat> s) { return {Ring::rational, std::move(s), TruncSeries<QRat>(0)}; }
    static AnySeries of(TruncSeries<QRat> s) { return {Ring::qrational, TruncSeries<Rat>(0), std::move(s)}; }
};

AnySeries any_series_from_json(const Json& j);
Json to_json(const AnySeries& s);
AnySeries any_series_mul(const AnySeries& a, const AnySeries& b);

} // namespace dtpt
