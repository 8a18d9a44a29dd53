#include <doctest.h>

#include <random>

#include "dtpt/partitions.hpp"
#include "dtpt/series_io.hpp"
#include "dtpt/trunc_series.hpp"

using namespace dtpt;

namespace {

TruncSeries<Rat> rat_series(std::vector<long> v) {
    std::vector<Rat> c;
    for (long x : v) c.emplace_back(x);
    return TruncSeries<Rat>(std::move(c));
}

std::vector<long> to_longs(const TruncSeries<Rat>& s) {
    std::vector<long> v;
    for (const auto& c : s.coeffs()) v.push_back(rat_to_long(c));
    return v;
}

TruncSeries<Rat> random_rat_series(std::mt19937& rng, int n) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<Rat> c;
    for (int i = 0; i <= n; ++i) c.push_back(rat(num(rng), den(rng)));
    return TruncSeries<Rat>(std::move(c));
}

TruncSeries<QRat> random_qrat_series(std::mt19937& rng, int n) {
    std::uniform_int_distribution<long> coef(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto rand_qrat = [&]() {
        QRat num(Rat(0));
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) num += QRat(Rat(coef(rng))) * QRat::q_power(i);
        QRat den = QRat::q_power(deg(rng)) + QRat(Rat(deg(rng) + 1));
        return num / den;
    };
    std::vector<QRat> c;
    for (int i = 0; i <= n; ++i) c.push_back(rand_qrat());
    return TruncSeries<QRat>(std::move(c));
}

} // namespace

TEST_CASE("macmahon product matches the brute-force partition oracle") {
    // frozen from two independent computations: the Euler product below and
    // depth-first enumeration of downward-closed box sets
    const std::vector<long> expected{1, 1, 3, 6, 13, 24, 48, 86, 160};
    auto m = macmahon_euler_product(8);
    CHECK(to_longs(m) == expected);
    for (int n = 0; n <= 8; ++n)
        CHECK(enum_plane_partitions(n) == expected[size_t(n)]);
    CHECK(to_longs(macmahon_euler_product(0)) == std::vector<long>{1});
}

TEST_CASE("series_mul basics") {
    auto a = rat_series({1, 1, 0});
    auto b = rat_series({1, -1, 0});
    CHECK(to_longs(series_mul(a, b)) == std::vector<long>{1, 0, -1});

    // different truncation orders silently truncate to the minimum
    auto wide = rat_series({1, 1, 3, 6});
    CHECK(series_mul(wide, rat_series({1, 1})).trunc_order() == 1);

    auto c = series_mul(rat_series({1, 1, 3}), rat_series({1, 1, 0}));
    CHECK(to_longs(c) == std::vector<long>{1, 2, 4});

    auto m = macmahon_euler_product(8);
    CHECK(series_mul(m, series_inv(m)) == TruncSeries<Rat>::one(8));
}

TEST_CASE("series_inv") {
    auto geo = series_inv(rat_series({1, -1, 0, 0, 0}));
    CHECK(to_longs(geo) == std::vector<long>{1, 1, 1, 1, 1});

    auto minv = series_inv(macmahon_euler_product(4));
    CHECK(to_longs(minv.truncated(2)) == std::vector<long>{1, -1, -2});

    CHECK_THROWS_AS(series_inv(rat_series({0, 1})), std::domain_error);
}

TEST_CASE("series_pow") {
    auto m = macmahon_euler_product(4);
    CHECK(series_pow(m, 1) == m);
    CHECK(to_longs(series_pow(m, 2)) == std::vector<long>{1, 2, 7, 18, 47});
    CHECK(series_pow(m, 0) == TruncSeries<Rat>::one(4));
    CHECK(to_longs(series_pow(rat_series({1, -1, 0, 0}), -2)) ==
          std::vector<long>{1, 2, 3, 4});
    CHECK_THROWS_AS(series_pow(rat_series({0, 1}), -1), std::domain_error);
}

TEST_CASE("series_scale_t substitutes q^k t for t") {
    auto one_plus_t = TruncSeries<QRat>({QRat(1), QRat(1)});
    auto scaled = series_scale_t(one_plus_t, 2);
    CHECK(scaled.coeff(0) == QRat(1));
    CHECK(scaled.coeff(1) == QRat::q());

    auto t2 = TruncSeries<QRat>({QRat(0), QRat(0), QRat(1)});
    CHECK(series_scale_t(t2, 2).coeff(2) == QRat::q_power(2));

    CHECK(series_scale_t(scaled, -2) == one_plus_t);
}

TEST_CASE("limit_q1 cancels before evaluating") {
    QRat q = QRat::q();
    QRat one(1);

    auto ratio = [&](int h) { return (pow(q, h) - one) / (q - one); };
    TruncSeries<QRat> s({ratio(2), ratio(5)});
    auto lim = limit_q1(s);
    CHECK(lim.coeff(0) == Rat(2));
    CHECK(lim.coeff(1) == Rat(5)); // e(P^4)

    TruncSeries<QRat> bad({QRat(1), one / (q - one)});
    CHECK_THROWS_AS(limit_q1(bad), PoleAtOne);
    try {
        limit_q1(bad);
    } catch (const PoleAtOne& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 40; ++iter) {
        auto a = random_rat_series(rng, 6);
        auto b = random_rat_series(rng, 6);
        auto c = random_rat_series(rng, 6);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, series_add(b, c)) ==
              series_add(series_mul(a, b), series_mul(a, c)));
    }
}

TEST_CASE("inverse is two-sided on random unit series") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        auto a = random_rat_series(rng, 6);
        if (a.coeff(0) == 0) continue;
        CHECK(series_mul(a, series_inv(a)) == TruncSeries<Rat>::one(6));
        CHECK(series_mul(series_inv(a), a) == TruncSeries<Rat>::one(6));
    }
}

TEST_CASE("scale_t is a ring homomorphism") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 10; ++iter) {
        auto a = random_qrat_series(rng, 4);
        auto b = random_qrat_series(rng, 4);
        CHECK(series_scale_t(series_mul(a, b), 2) ==
              series_mul(series_scale_t(a, 2), series_scale_t(b, 2)));
        CHECK(series_scale_t(series_add(a, b), 3) ==
              series_add(series_scale_t(a, 3), series_scale_t(b, 3)));
    }
}

TEST_CASE("limit_q1 is a ring homomorphism where defined") {
    std::mt19937 rng(123);
    for (int iter = 0; iter < 10; ++iter) {
        auto a = random_qrat_series(rng, 4);
        auto b = random_qrat_series(rng, 4);
        bool defined = true;
        for (const auto& s : {a, b})
            for (const auto& c : s.coeffs())
                if (c.has_pole_at_one()) defined = false;
        if (!defined) continue;
        CHECK(limit_q1(series_mul(a, b)) == series_mul(limit_q1(a), limit_q1(b)));
        CHECK(limit_q1(series_add(a, b)) == series_add(limit_q1(a), limit_q1(b)));
    }
}

TEST_CASE("json round-trip is bit-exact") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 10; ++iter) {
        auto a = random_rat_series(rng, 5);
        auto j = to_json(a);
        CHECK(rat_series_from_json(j) == a);
        CHECK(to_json(rat_series_from_json(j)) == j);

        auto b = random_qrat_series(rng, 3);
        auto jq = to_json(b);
        CHECK(qrat_series_from_json(jq) == b);
        CHECK(to_json(qrat_series_from_json(jq)) == jq);
    }

    auto m = to_json(macmahon_euler_product(6));
    CHECK(m["var"] == "t");
    CHECK(m["trunc"] == 6);
    CHECK(m["coeffs"][3] == "6");
}

TEST_CASE("runtime series layer rejects mixed coefficient rings") {
    auto a = AnySeries::of(macmahon_euler_product(3));
    auto b = AnySeries::of(TruncSeries<QRat>({QRat(1), QRat::q()}));
    CHECK_THROWS_AS(any_series_mul(a, b), std::invalid_argument);
    CHECK(any_series_mul(a, a).rat == series_pow(macmahon_euler_product(3), 2));
}
