#pragma once

#include "artifact/matrix.hpp"
#include "artifact/rational.hpp"

#include <string>
#include <vector>

namespace artifact {

enum class Space { T, M };
enum class PicVariant { Generic, PEqualsNMinusS, PEqualsSEqualsNMinusS };

std::string to_string(Space sp);
std::string to_string(PicVariant v);

/**
 * Named Z-basis of Pic. T: H, D+_1..D+_r, D-_1..D-_r, dropping D-_r when p = n-s and also D+_r
 * when p = s = n-s. M: H, Dc_1..Dc_r, dropping Dc_r when p = n-s and H as well when p = s = n-s.
 */
struct PicBasis {
    Space space = Space::T;
    PicVariant variant = PicVariant::Generic;
    int s = 0, p = 0, n = 0, r = 0;
    std::vector<std::string> names;
    bool operator==(const PicBasis& o) const;
};

/** Requires 2p <= n <= 2s; throws ParamError with a normalization hint otherwise. */
void require_normalized(int s, int p, int n);

/** T: needs 2p <= n <= 2s. M: needs p < s, or p = s = n-s. */
PicBasis pic_basis(Space sp, int s, int p, int n);

/**
 * Coordinates over the full generator list (T: [H, D+_1..r, D-_1..r]; M: [H, Dc_1..r]) before
 * the dropped generators are rewritten.
 */
using FullVector = std::vector<Rat>;

struct DivisorClass {
    PicBasis basis;
    std::vector<Int> coeffs;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const Int& c) const;
    bool operator==(const DivisorClass& o) const;
    bool is_zero() const;
    /** Coefficient of a named basis generator; 0 when absent. */
    Int coeff(const std::string& name) const;
    std::string to_string() const;
};

DivisorClass zero_class(const PicBasis& b);

/** Rewrites dropped generators through the basis identities. */
std::vector<Rat> reduce_full(const PicBasis& b, const FullVector& v);
/** Throws CrossCheckError when the reduced coordinates are not integral. */
DivisorClass from_full(const PicBasis& b, const FullVector& v);

/** Full-vector helpers. */
FullVector full_zero(const PicBasis& b);
FullVector full_H(const PicBasis& b);
FullVector full_D_plus(const PicBasis& b, int i);
FullVector full_D_minus(const PicBasis& b, int i);
FullVector full_D_check(const PicBasis& b, int i);

/** B_j on T, 0 <= j <= r; B_0 = D+_r when p = s and B_r = D-_r when p = n-s. */
DivisorClass divisor_B(int s, int p, int n, int j);
DivisorClass canonical_T(int s, int p, int n);
/** The B-form of K_T, expanded over the basis. */
DivisorClass canonical_T_Bform(int s, int p, int n);
/** Full-vector form of K_T (all generators, nothing dropped). */
FullVector canonical_T_full(int s, int p, int n);

/** Coefficients c_j of -K_T = sum c_j B_j + sum D; zero entries mark absent B_j. */
std::vector<Int> bform_coefficients_T(int s, int p, int n);
/** Same for K_M over Bc_j. */
std::vector<Int> bform_coefficients_M(int s, int p, int n);

/** Bc_i on M, 0 <= i <= r; Bc_r = Dc_r when p = n-s. */
DivisorClass divisor_Bcheck(int s, int p, int n, int i);
DivisorClass canonical_M(int s, int p, int n);
DivisorClass canonical_M_Bform(int s, int p, int n);

struct NamedDivisor {
    std::string name;
    DivisorClass divisor;
    FullVector full;
};

/** The principal divisors (f_k) of the B-semi-invariants; each must be the zero class. */
std::vector<NamedDivisor> principal_divisors(int s, int p, int n);

/** Full vectors that vanish in Pic: the identities used to drop generators. */
std::vector<FullVector> basis_relations(const PicBasis& b);

enum class Symmetry { USD, DUAL, Usd, Dual };
std::string to_string(Symmetry sym);
Symmetry parse_symmetry(const std::string& text);

/** Pullback on Pic of a self-map; column j is the image of basis generator j. */
struct LatticeMap {
    Symmetry symmetry;
    PicBasis basis;
    RatMatrix matrix;
    bool integral = true;
    std::vector<Rat> apply(const std::vector<Rat>& coords) const;
    DivisorClass apply(const DivisorClass& d) const;
};

/** USD/Usd need n = 2s, DUAL/Dual need n = 2p; otherwise ParamError. */
LatticeMap pullback(Symmetry sym, int s, int p, int n);

/** Coweights over gamma_1..gamma_r (T) or gamma_2..gamma_r (M). */
using Coweight = std::vector<Int>;

struct WeightData {
    int r = 0;
    std::vector<std::string> chi;
    std::vector<Coweight> rho_B;       // j = 0..r
    std::vector<Coweight> v_D_plus;    // i = 1..r
    std::vector<Coweight> v_D_minus;   // i = 1..r
    std::vector<Coweight> v_D_check;   // i = 2..r, over gamma_2..gamma_r
    std::vector<Coweight> rho_Bcheck;  // j = 0..r over gamma_2..gamma_r; j = 0 absent when p = s
    bool has_Bcheck0 = true;
};

WeightData weight_data(int s, int p, int n);

}  // namespace artifact
