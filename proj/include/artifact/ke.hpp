#pragma once

#include "artifact/picard.hpp"
#include "artifact/polytope.hpp"

#include <string>
#include <vector>

namespace artifact {

/** Coefficients over chi_1..chi_r, eps_1..eps_r, tau_1..tau_{s-p}, kappa_1..kappa_{|n-s-p|}. */
struct AmbientWeight {
    std::vector<Rat> chi;
    std::vector<Rat> eps;
    std::vector<Rat> tau;
    std::vector<Rat> kappa;
};

/** Weight of a B-semi-invariant anticanonical section. Needs 2p <= n <= 2s. */
AmbientWeight two_rho_P(int s, int p, int n);

/**
 * Duistermaat-Heckman density on the moment polytope with eps, tau, kappa pinned by 2rho_P, in absolute
 * chi-coordinates. T: variables X_1..X_r. M: variables X_2..X_r, X_1 fixed to the chi_1 coefficient of
 * 2rho_P (needs r >= 2). Positive constant factors are dropped.
 */
FactoredPoly dh_density(int s, int p, int n, Space space);

struct QData {
    Space space = Space::T;
    int dim = 0;
    std::vector<std::string> names;
    std::vector<Point> generators;
    /** Generators that are vertices of Q, i.e. that span a facet of Q*. */
    std::vector<Point> vertices;
    /** Q* = {u : <u, g> <= 1 for every generator g}. */
    HPolytope dual;
};

/** Q from the B-form canonical coefficients and the valuation vectors. Needs 2p <= n <= 2s; M also r >= 2. */
QData build_Q_and_dual(int s, int p, int n, Space space);

/** 2rho_P + Q* in the coordinates of dh_density. */
HPolytope moment_region(int s, int p, int n, Space space);

struct KECase {
    Space space = Space::T;
    int s = 0, p = 0, n = 0;
    /** Symmetries applied, in order: "DUAL", "USD" (T); "Dual", "Usd", "swap" (M). */
    std::vector<std::string> trail;
};

/** T: DUAL then USD to reach 2p <= n <= 2s. M: additionally (s,p) -> (n-p, n-s) when p < n-s. */
KECase normalize_case(Space space, int s, int p, int n);

struct KECondition {
    std::string name;
    std::string relation;  // "=" or ">"
    Rat lhs;
    Rat rhs;
    bool holds = false;
};

struct KEResult {
    KECase normalized;
    bool ke = false;
    /** "barycenter", "homogeneous" or "closed-form" */
    std::string method;
    /** Exact integrals over the moment region in absolute coordinates. */
    std::vector<std::pair<std::string, Rat>> integrals;
    std::vector<KECondition> conditions;
};

/** Needs rank <= 2 after normalization; larger ranks are not Fano and raise ParamError. */
KEResult ke_test_T(int s, int p, int n);
KEResult ke_test_M(int s, int p, int n);

}  // namespace artifact
