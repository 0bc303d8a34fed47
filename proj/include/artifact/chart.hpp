#pragma once

#include "artifact/index.hpp"
#include "artifact/matrix.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace artifact {

/**
 * Chart label for the open cell U_l. rows/cols hold (i_1..i_r) and (j_1..j_r): the first r-l
 * pairs index the b-vectors (rows in [l+1,p], cols in [s+l+1,n]), the last l pairs the a-vectors
 * (rows in [1,l], cols in [1,s-p+l]). Needs p <= s.
 */
struct ChartIndex {
    int s = 0, p = 0, n = 0, l = 0;
    std::vector<int> rows;
    std::vector<int> cols;
};

ChartIndex canonical_chart(int s, int p, int n, int l);
void validate_chart(const ChartIndex& c);
bool is_canonical(const ChartIndex& c);

enum class CoordKind { X, Y, A, B, Xi };

/** k is the vector number (1..r) for A, B, Xi and 0 for X, Y; row/col are 1-based. */
struct ChartCoord {
    CoordKind kind;
    int k, row, col;
    auto key() const { return std::make_tuple(static_cast<int>(kind), k, row, col); }
    bool operator<(const ChartCoord& o) const { return key() < o.key(); }
    bool operator==(const ChartCoord& o) const { return key() == o.key(); }
};

std::string to_string(const ChartCoord& c);

/** All holomorphic coordinates of the chart; their number is p(n-p). */
std::vector<ChartCoord> chart_coordinates(const ChartIndex& c);

struct ChartPoint {
    std::map<ChartCoord, Rat> values;
    const Rat& operator[](const ChartCoord& c) const;
};

ChartPoint zero_point(const ChartIndex& c);

/** Entries num/den with num in [-5,5], den in [1,4]; leading a/b scalars are nonzero. */
ChartPoint random_point(const ChartIndex& c, std::mt19937_64& rng);

/** The p x n matrix of the chart map. */
RatMatrix gamma(const ChartIndex& c, const ChartPoint& pt);

struct ClaimFailure {
    std::string family;
    int k = 0, mu = 0, nu = 0;
    IndexTuple index;
    Rat expected, actual;
};

struct ClaimReport {
    int checked = 0;
    std::vector<ClaimFailure> failures;
    bool ok() const { return failures.empty(); }
};

/** P_{I_k} = sign * lead product, 0 <= k <= r. Canonical chart only. */
ClaimReport verify_claim_I(const ChartIndex& c, const ChartPoint& pt);

/** Families III, III', III'*, III'', III''', III'''*, III''''. Canonical chart only. */
ClaimReport verify_claim_III(const ChartIndex& c, const ChartPoint& pt);

/**
 * Divisibility by the lead product, checked by vanishing: zeroing the t-th a-lead (b-lead)
 * kills every coordinate of strata k <= l-t (k >= l+t).
 */
ClaimReport verify_claim_II(const ChartIndex& c, const ChartPoint& pt);

struct CoordWeight {
    ChartCoord coord;
    int weight;
};

/** Nonzero C*-weights: first a-vector lead -1, first b-vector lead +1. */
std::vector<CoordWeight> cstar_weights(const ChartIndex& c);

/** Applies the weights with factor lambda (nonzero). */
ChartPoint cstar_act(const ChartIndex& c, const ChartPoint& pt, const Rat& lambda);

/**
 * Checks Gamma(lambda . pt) = diag(lambda^-1 I_l, I) Gamma(pt) diag(I_s, lambda I_{n-s}) and the
 * projective equality of the full and stratum Plucker vectors.
 */
bool verify_cstar(const ChartIndex& c, const ChartPoint& pt, const Rat& lambda);

}  // namespace artifact
