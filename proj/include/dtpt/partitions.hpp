#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dtpt/cache.hpp"
#include "dtpt/trunc_series.hpp"

namespace dtpt {

// A configuration of infinite legs along coordinate axes, each with
// cross-section a single box. The leg set encodes the underlying monomial
// Cohen-Macaulay curve: no legs for a fat point, one leg for a smooth axis
// germ, two or three for a coordinate cross.
struct LegConfig {
    bool x = false;
    bool y = false;
    bool z = false;

    static LegConfig none() { return {}; }
    static LegConfig axes(int count); // first `count` axes, count in [0,3]

    int count() const { return int(x) + int(y) + int(z); }
    bool contains(int px, int py, int pz) const {
        return (x && py == 0 && pz == 0) || (y && px == 0 && pz == 0) ||
               (z && px == 0 && py == 0);
    }
    friend bool operator==(const LegConfig&, const LegConfig&) = default;
};

struct Point3 {
    int8_t x, y, z;
};

// A finite set of lattice boxes in the non-negative octant, measured
// against a leg configuration. Valid when boxes are disjoint from the legs
// and boxes+legs are downward closed: every coordinatewise predecessor of
// a box lies in the legs or among the boxes.
struct BoxSet {
    LegConfig legs;
    std::vector<Point3> boxes;

    bool valid() const;
};

struct EnumOptions {
    int box_bound = -1;    // side of the search cube; -1 means n+1
    bool parallel = false; // split the search tree at depth 1
};

// Number of downward-closed n-box configurations outside the given legs.
// With no legs these are the 3-dimensional (plane) partitions of n.
long enum_leg_configs(const LegConfig& legs, int n, const EnumOptions& opts = {});

long enum_plane_partitions(int n, const EnumOptions& opts = {});

// Series whose t^n coefficient is enum_leg_configs(legs, n), the fixed-point
// count of the Hilbert-side punctual fiber over the monomial curve.
TruncSeries<Rat> dt_punctual_series(const LegConfig& legs, int trunc,
                                    const EnumOptions& opts = {},
                                    const DiskCache& cache = DiskCache::disabled());

// Cached single count; key = {legs, n, box_bound, code_version}.
long enum_leg_configs_cached(const LegConfig& legs, int n, const EnumOptions& opts,
                             const DiskCache& cache);

// Enumerates the box sets themselves (used by the Ext ledger sweep, which
// turns each staircase into a monomial module). Deterministic order.
std::vector<BoxSet> list_leg_configs(const LegConfig& legs, int n, int box_bound = -1);

} // namespace dtpt
