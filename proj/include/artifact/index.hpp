#pragma once

#include <string>
#include <vector>

namespace artifact {

struct GrassParams {
    int s = 0;
    int p = 0;
    int n = 0;
};

/** Throws ParamError unless 0 < p < n and 0 < s < n. */
void validate(const GrassParams& g);

/** Strictly decreasing entries in [1,n]. */
using IndexTuple = std::vector<int>;

std::string to_string(const IndexTuple& t);

/** r = min(s, n-s, p, n-p). */
int rank(int s, int p, int n);

/** All C(n,p) decreasing tuples in canonical (lexicographic) order. */
std::vector<IndexTuple> enumerate_full(int p, int n);

/** Tuples with exactly k entries in [s+1,n], canonical order. Empty when the stratum is empty. */
std::vector<IndexTuple> enumerate_stratum(int s, int p, int n, int k);

/** |stratum| - 1, so -1 for an empty stratum. */
long stratum_dimension(int s, int p, int n, int k);

/** Number of entries above s; the stratum a tuple belongs to. */
int stratum_of(const IndexTuple& t, int s);

bool partition_check(int s, int p, int n);

bool is_decreasing(const IndexTuple& t, int n);

/** I_k = (s+k, ..., s-p+k+1); 0 <= k <= p, needs s-p+k >= 0 and s+k <= n. */
IndexTuple index_I(int s, int p, int n, int k);
/** I*_k = (s+k+1, s+k-1, ..., s-p+k+2, s-p+k); 1 <= k <= p-1. */
IndexTuple index_I_star(int s, int p, int n, int k);
/** I^k_{mu nu}: I_k without mu, then nu appended; s-p+k+1 <= mu <= s, 1 <= nu <= s-p+k. */
IndexTuple index_I_mu_nu(int s, int p, int n, int k, int mu, int nu);
/** I^{k*}_{mu nu}: nu, then I_k without mu; s+1 <= mu <= s+k, s+k+1 <= nu <= n. */
IndexTuple index_I_star_mu_nu(int s, int p, int n, int k, int mu, int nu);

}  // namespace artifact
