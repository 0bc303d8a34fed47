#pragma once

#include "artifact/index.hpp"
#include "artifact/matrix.hpp"

#include <map>
#include <vector>

namespace artifact {

/** Coordinates keyed by tuple; std::map iteration follows the canonical order. */
using Coords = std::map<IndexTuple, Rat>;

struct PluckerVector {
    int p = 0;
    int n = 0;
    Coords coords;

    bool is_zero() const;
    const Rat& at(const IndexTuple& t) const;
};

/**
 * Minor of M on the columns of t. Columns are taken in increasing index order; this fixes
 * every sign in the chart formulas.
 */
Rat minor(const RatMatrix& m, const IndexTuple& t);

PluckerVector plucker_vector(const RatMatrix& m);

/** Restriction to the stratum with k entries above s. */
Coords project_stratum(const PluckerVector& v, int s, int k);

/** Divides by the first nonzero coordinate in canonical order; zero maps stay zero. */
Coords normalize(const Coords& c);

bool proportional(const Coords& a, const Coords& b);

struct BlowupPoint {
    Coords full;
    std::vector<Coords> strata;  // k = 0..p; empty stratum = empty map
};

/** Throws ParamError naming k when a nonempty stratum vanishes identically. */
BlowupPoint blowup_map(const RatMatrix& m, int s);

}  // namespace artifact
