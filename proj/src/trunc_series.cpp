#include "dtpt/trunc_series.hpp"

namespace dtpt {

TruncSeries<Rat> macmahon_euler_product(int trunc) {
    if (trunc < 0) throw std::invalid_argument("negative truncation order");
    TruncSeries<Rat> acc = TruncSeries<Rat>::one(trunc);
    for (int k = 1; k <= trunc; ++k) {
        // factor (1 - t^k)^{-k}
        std::vector<Rat> f(static_cast<size_t>(trunc) + 1, Rat(0));
        f[0] = 1;
        f[static_cast<size_t>(k)] = -1;
        acc = series_mul(acc, series_pow(TruncSeries<Rat>(std::move(f)), -static_cast<long>(k)));
    }
    return acc;
}

TruncSeries<Rat> geometric_series(int trunc) {
    std::vector<Rat> c(static_cast<size_t>(trunc) + 1, Rat(1));
    return TruncSeries<Rat>(std::move(c));
}

} // namespace dtpt
