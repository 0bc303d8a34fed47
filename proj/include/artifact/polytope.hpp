#pragma once

#include "artifact/poly.hpp"

#include <string>
#include <vector>

namespace artifact {

using Point = std::vector<Rat>;

/** a . x <= b */
struct Inequality {
    std::vector<Rat> a;
    Rat b;
};

struct HPolytope {
    int d = 0;
    std::vector<Inequality> ineqs;

    explicit HPolytope(int dim = 0) : d(dim) {}
    void add(const std::vector<Rat>& a, const Rat& b);
    /** lo <= x_i <= hi */
    void add_bounds(int i, const Rat& lo, const Rat& hi);
    bool contains(const Point& x) const;
    /** Image {A v + c}, A invertible d x d. */
    HPolytope affine_image(const RatMatrix& A, const Point& c) const;
};

struct Simplex {
    std::vector<Point> vertices;  // d+1 points
    /** |det(v_i - v_0)| */
    Rat abs_det() const;
    Rat volume() const;
};

/** Exact vertex set in lexicographic order; ParamError when unbounded or empty. Needs d <= 6. */
std::vector<Point> vertices(const HPolytope& P);

bool is_bounded(const HPolytope& P);

/** Cone from the lexicographically least vertex over recursively triangulated facets. */
std::vector<Simplex> triangulate(const HPolytope& P);

Rat volume(const HPolytope& P);

/** Exact integral over a simplex via x = v_0 + sum t_i (v_i - v_0) and the standard-simplex moments. */
Rat integrate(const MultiPoly& f, const Simplex& S);
Rat integrate(const MultiPoly& f, const HPolytope& P);

/** c + a . x */
struct LinearForm {
    std::vector<Rat> a;
    Rat c;
    Rat operator()(const Point& x) const;
};

/** scale * prod factor^power */
struct FactoredPoly {
    int d = 0;
    Rat scale{1};
    std::vector<std::pair<LinearForm, unsigned>> factors;
    MultiPoly expand() const;
};

/** integral of rho, then of x_k rho for k = 0..d-1. */
struct Moments {
    Rat mass;
    std::vector<Rat> first;
};

/**
 * Barycentric route for products of linear forms: each simplex expands rho as a homogeneous integer
 * polynomial in barycentric coordinates, then uses int lambda^b = |det| prod b_i! / (|b|+d)!.
 */
Moments integrate_moments(const FactoredPoly& rho, const HPolytope& P);

/** Lines "ineq: a1 ... ad <= b"; blank lines and '#' comments are ignored. */
HPolytope read_polytope(const std::string& text);
std::string write_polytope(const HPolytope& P);

}  // namespace artifact
