#pragma once

#include "artifact/picard.hpp"

#include <optional>
#include <string>
#include <vector>

namespace artifact {

/** gamma_l, zeta^l_j, zeta^{l,k}_{u,v}, delta^l_{m1,m2}, Delta^l_{m1,m2}. */
enum class CurveFamily { Gamma, Zeta, ZetaK, Delta, DeltaCap };

struct CurveId {
    CurveFamily family = CurveFamily::Gamma;
    int l = 0, j = 0, k = 0, u = 0, v = 0, m1 = 0, m2 = 0;
    std::string to_string() const;
    bool operator==(const CurveId& o) const;
};

/** Intersection numbers with H, D-_1..D-_r, D+_1..D+_r. */
struct CurveClass {
    Int h;
    std::vector<Int> minus;
    std::vector<Int> plus;
};

/** Every valid curve id for (s,p,n), grouped by chart l = 0..r. Needs 2p <= n <= 2s. */
std::vector<CurveId> enumerate_curves(int s, int p, int n);

/** Throws ParamError naming the violated range. */
void validate_curve(int s, int p, int n, const CurveId& id);

CurveClass curve_class(int s, int p, int n, const CurveId& id);

/** Pairing of a T full vector [H, D+_1..r, D-_1..r] with a curve. */
Rat pair(const FullVector& divisor, const CurveClass& c);

/** -K_T . curve from the closed-form tables, independent of canonical_T. */
Int closed_form_antik(int s, int p, int n, const CurveId& id);

/** -K_T . curve; throws CrossCheckError unless the pairing and the closed form agree. */
Int antik_degree(int s, int p, int n, const CurveId& id);

struct NefReport {
    bool nef = false;
    bool ample = false;
    Int min_degree;
    std::optional<CurveId> witness;  // a degree-0 curve when not ample
    int curves = 0;
};

NefReport nef_ample_T(int s, int p, int n);

struct AmpleMReport {
    bool ample = false;
    std::optional<Int> min_degree;  // absent when no l = 0 curve exists
    int curves = 0;
};

/** Pairs -K_T - D-_1 with the l = 0 families zeta^0, zeta^{0,k}, delta^0. */
AmpleMReport ample_M(int s, int p, int n);

}  // namespace artifact
