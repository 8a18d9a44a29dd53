#include "dtpt/partitions.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace dtpt {

namespace {

constexpr int kMaxBoxes = 12;

struct Searcher {
    // Candidate points (everything in the cube except leg points), in
    // lexicographic order with x major. Each coordinatewise predecessor of
    // a candidate is either a leg point or an earlier candidate, so adding
    // boxes in increasing candidate order visits every downward-closed set
    // exactly once.
    Searcher(const LegConfig& legs, int bound) : legs_(legs), bound_(bound) {
        candidates_.reserve(static_cast<size_t>(bound) * bound * bound);
        for (int x = 0; x < bound; ++x)
            for (int y = 0; y < bound; ++y)
                for (int z = 0; z < bound; ++z)
                    // a box with all coordinates at the bound could never
                    // extend to the next size; keep the full cube anyway,
                    // the validity of the bound is checked by tests
                    if (!legs.contains(x, y, z))
                        candidates_.push_back({int8_t(x), int8_t(y), int8_t(z)});
        index_.assign(static_cast<size_t>(bound) * bound * bound, -1);
        for (size_t i = 0; i < candidates_.size(); ++i)
            index_[pack(candidates_[i])] = static_cast<int>(i);
        in_set_.assign(candidates_.size(), false);
    }

    size_t pack(Point3 p) const {
        return (static_cast<size_t>(p.x) * bound_ + p.y) * bound_ + p.z;
    }

    bool addable(Point3 p) const {
        auto pred_ok = [&](int x, int y, int z) {
            if (legs_.contains(x, y, z)) return true;
            int idx = index_[(static_cast<size_t>(x) * bound_ + y) * bound_ + z];
            return idx >= 0 && in_set_[static_cast<size_t>(idx)];
        };
        if (p.x > 0 && !pred_ok(p.x - 1, p.y, p.z)) return false;
        if (p.y > 0 && !pred_ok(p.x, p.y - 1, p.z)) return false;
        if (p.z > 0 && !pred_ok(p.x, p.y, p.z - 1)) return false;
        return true;
    }

    long count(int from, int remaining) {
        if (remaining == 0) return 1;
        long total = 0;
        for (int i = from; i < static_cast<int>(candidates_.size()); ++i) {
            if (!addable(candidates_[static_cast<size_t>(i)])) continue;
            in_set_[static_cast<size_t>(i)] = true;
            total += count(i + 1, remaining - 1);
            in_set_[static_cast<size_t>(i)] = false;
        }
        return total;
    }

    void collect(int from, int remaining, std::vector<Point3>& current,
                 std::vector<BoxSet>& out) {
        if (remaining == 0) {
            out.push_back({legs_, current});
            return;
        }
        for (int i = from; i < static_cast<int>(candidates_.size()); ++i) {
            if (!addable(candidates_[static_cast<size_t>(i)])) continue;
            in_set_[static_cast<size_t>(i)] = true;
            current.push_back(candidates_[static_cast<size_t>(i)]);
            collect(i + 1, remaining - 1, current, out);
            current.pop_back();
            in_set_[static_cast<size_t>(i)] = false;
        }
    }

    LegConfig legs_;
    int bound_;
    std::vector<Point3> candidates_;
    std::vector<int> index_;
    std::vector<char> in_set_;
};

int effective_bound(int n, const EnumOptions& opts) {
    int bound = opts.box_bound >= 0 ? opts.box_bound : n + 1;
    if (bound < n) throw std::invalid_argument("box bound smaller than the box count");
    return std::max(bound, 1);
}

long count_sequential(const LegConfig& legs, int n, int bound) {
    Searcher s(legs, bound);
    return s.count(0, n);
}

// Splits at depth 1: one task per choice of lexicographically-first box.
// Each branch is independent; the total is order-independent by integer
// addition, so this agrees with the sequential mode.
long count_parallel(const LegConfig& legs, int n, int bound) {
    if (n == 0) return 1;
    Searcher probe(legs, bound);
    std::vector<int> firsts;
    for (int i = 0; i < static_cast<int>(probe.candidates_.size()); ++i)
        if (probe.addable(probe.candidates_[static_cast<size_t>(i)])) firsts.push_back(i);

    std::vector<std::future<long>> tasks;
    tasks.reserve(firsts.size());
    for (int i : firsts) {
        tasks.push_back(std::async(std::launch::async, [&, i]() {
            Searcher s(legs, bound);
            s.in_set_[static_cast<size_t>(i)] = true;
            return s.count(i + 1, n - 1);
        }));
    }
    long total = 0;
    for (auto& t : tasks) total += t.get();
    return total;
}

} // namespace

LegConfig LegConfig::axes(int count) {
    if (count < 0 || count > 3) throw std::invalid_argument("leg count must be 0..3");
    LegConfig legs;
    legs.x = count >= 1;
    legs.y = count >= 2;
    legs.z = count >= 3;
    return legs;
}

bool BoxSet::valid() const {
    auto in_boxes = [&](int x, int y, int z) {
        return std::any_of(boxes.begin(), boxes.end(), [&](Point3 p) {
            return p.x == x && p.y == y && p.z == z;
        });
    };
    for (const Point3& p : boxes) {
        if (legs.contains(p.x, p.y, p.z)) return false; // finite part meets a leg
        auto pred_ok = [&](int x, int y, int z) {
            return legs.contains(x, y, z) || in_boxes(x, y, z);
        };
        if (p.x > 0 && !pred_ok(p.x - 1, p.y, p.z)) return false;
        if (p.y > 0 && !pred_ok(p.x, p.y - 1, p.z)) return false;
        if (p.z > 0 && !pred_ok(p.x, p.y, p.z - 1)) return false;
    }
    return true;
}

long enum_leg_configs(const LegConfig& legs, int n, const EnumOptions& opts) {
    if (n < 0) throw std::invalid_argument("negative box count");
    if (n > kMaxBoxes) throw std::invalid_argument("box count exceeds the enumeration guard");
    int bound = effective_bound(n, opts);
    return opts.parallel ? count_parallel(legs, n, bound) : count_sequential(legs, n, bound);
}

long enum_plane_partitions(int n, const EnumOptions& opts) {
    return enum_leg_configs(LegConfig::none(), n, opts);
}

long enum_leg_configs_cached(const LegConfig& legs, int n, const EnumOptions& opts,
                             const DiskCache& cache) {
    if (!cache.enabled()) return enum_leg_configs(legs, n, opts);
    nlohmann::json key{{"kind", "leg_configs"},
                       {"legs", {legs.x, legs.y, legs.z}},
                       {"n", n},
                       {"box_bound", effective_bound(n, opts)}};
    nlohmann::json got = cache.get_or_compute(
        key, [&]() { return nlohmann::json(enum_leg_configs(legs, n, opts)); });
    return got.get<long>();
}

TruncSeries<Rat> dt_punctual_series(const LegConfig& legs, int trunc,
                                    const EnumOptions& opts, const DiskCache& cache) {
    std::vector<Rat> coeffs(static_cast<size_t>(trunc) + 1);
    for (int n = 0; n <= trunc; ++n)
        coeffs[static_cast<size_t>(n)] = Rat(enum_leg_configs_cached(legs, n, opts, cache));
    return TruncSeries<Rat>(std::move(coeffs));
}

std::vector<BoxSet> list_leg_configs(const LegConfig& legs, int n, int box_bound) {
    if (n < 0 || n > kMaxBoxes) throw std::invalid_argument("box count exceeds the enumeration guard");
    EnumOptions opts;
    opts.box_bound = box_bound;
    Searcher s(legs, effective_bound(n, opts));
    std::vector<BoxSet> out;
    std::vector<Point3> current;
    s.collect(0, n, current, out);
    return out;
}

} // namespace dtpt
