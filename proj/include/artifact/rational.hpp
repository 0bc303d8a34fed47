#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace artifact {

using Int = mpz_class;
using Rat = mpq_class;

/** Always "num/den", integers included ("3/1"). */
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

/** Parses "a", "-a" or "a/b"; throws ParamError on malformed input or zero denominator. */
Rat parse_rat(const std::string& text);

Int factorial(unsigned k);
Int binomial(unsigned n, unsigned k);

inline int sign(const Rat& q) { return sgn(q); }

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int lcm_of_denominators(const std::vector<Rat>& v);

}  // namespace artifact
