#include "artifact/polytope.hpp"

#include "artifact/errors.hpp"
#include "artifact/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_map>

namespace artifact {

namespace {

constexpr int kMaxDim = 6;

Rat dot(const std::vector<Rat>& a, const Point& x) {
    Rat t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * x[i];
    return t;
}

// Calls body on every k-subset of [0, m), in lexicographic order.
template <class F>
void for_each_subset(int m, int k, F&& body) {
    if (k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        body(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Point> raw_vertices(int d, const std::vector<Inequality>& ineqs) {
    std::set<Point> found;
    int m = static_cast<int>(ineqs.size());
    for_each_subset(m, d, [&](const std::vector<int>& rows) {
        RatMatrix A(d, d);
        std::vector<Rat> b(d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) A(i, j) = ineqs[rows[i]].a[j];
            b[i] = ineqs[rows[i]].b;
        }
        auto x = solve(A, b);
        if (!x) return;
        for (const auto& q : ineqs)
            if (dot(q.a, *x) > q.b) return;
        found.insert(*x);
    });
    return {found.begin(), found.end()};
}

void check_dim(const HPolytope& P) {
    if (P.d < 1 || P.d > kMaxDim) throw ParamError("polytope dimension must be in [1, 6]");
    for (const auto& q : P.ineqs)
        if (static_cast<int>(q.a.size()) != P.d) throw ParamError("inequality has the wrong length");
}

int affine_dim(const std::vector<Point>& pts, const std::vector<int>& ids) {
    if (ids.empty()) return -1;
    int d = static_cast<int>(pts[ids[0]].size());
    RatMatrix M(static_cast<int>(ids.size()) - 1, d);
    for (std::size_t i = 1; i < ids.size(); ++i)
        for (int j = 0; j < d; ++j) M(static_cast<int>(i) - 1, j) = pts[ids[i]][j] - pts[ids[0]][j];
    return ids.size() == 1 ? 0 : rank(M);
}

struct Triangulator {
    const HPolytope& P;
    const std::vector<Point>& pts;
    std::vector<std::vector<bool>> tight;  // tight[v][i]

    Triangulator(const HPolytope& poly, const std::vector<Point>& v) : P(poly), pts(v) {
        for (const auto& x : pts) {
            std::vector<bool> t;
            for (const auto& q : P.ineqs) t.push_back(dot(q.a, x) == q.b);
            tight.push_back(t);
        }
    }

    // face: sorted vertex ids of a k-dimensional face.
    std::vector<std::vector<int>> run(const std::vector<int>& face, int k) {
        if (k == 0) return {{face[0]}};
        int v0 = face[0];
        std::set<std::vector<int>> facets;
        for (std::size_t i = 0; i < P.ineqs.size(); ++i) {
            std::vector<int> g;
            for (int v : face)
                if (tight[v][i]) g.push_back(v);
            if (g.size() == face.size() || static_cast<int>(g.size()) < k) continue;
            if (std::binary_search(g.begin(), g.end(), v0)) continue;
            if (affine_dim(pts, g) != k - 1) continue;
            facets.insert(g);
        }
        std::vector<std::vector<int>> out;
        for (const auto& g : facets)
            for (auto s : run(g, k - 1)) {
                s.insert(s.begin(), v0);
                out.push_back(std::move(s));
            }
        return out;
    }
};

Int factorial_cached(std::vector<Int>& cache, int k) {
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.empty() ? Int(1) : Int(cache.back() * Int(static_cast<unsigned long>(cache.size()))));
    return cache[k];
}

// Homogeneous polynomial in m <= 8 barycentric variables, exponents packed 8 bits each.
using Packed = std::uint64_t;
using HomPoly = std::unordered_map<Packed, Int>;

int unpack(Packed key, int i) { return static_cast<int>((key >> (8 * i)) & 0xffu); }

HomPoly times_linear(const HomPoly& f, const std::vector<Int>& w) {
    HomPoly out;
    out.reserve(f.size() * 2);
    for (const auto& [key, c] : f)
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 0) continue;
            Int t = c * w[i];
            out[key + (Packed(1) << (8 * i))] += t;
        }
    return out;
}

Moments simplex_moments(const FactoredPoly& rho, const Simplex& S) {
    int d = rho.d, m = d + 1;
    Rat scale = rho.scale;
    HomPoly f{{0, Int(1)}};
    int degree = 0;
    for (const auto& [lf, power] : rho.factors) {
        std::vector<Rat> w;
        for (const auto& v : S.vertices) w.push_back(lf(v));
        Int L = lcm_of_denominators(w);
        std::vector<Int> wi;
        for (const auto& x : w) wi.push_back(Int(x * L));
        for (unsigned e = 0; e < power; ++e) {
            f = times_linear(f, wi);
            scale /= L;
            ++degree;
        }
    }
    if (degree > 250) throw ParamError("density degree too large");
    std::vector<Int> fact;
    Int mass_sum = 0;
    std::vector<Int> lam_sum(m, Int(0));
    // Deterministic order: sort keys.
    std::vector<Packed> keys;
    keys.reserve(f.size());
    for (const auto& kv : f) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end());
    for (Packed key : keys) {
        const Int& c = f[key];
        Int prod = 1;
        for (int i = 0; i < m; ++i) prod *= factorial_cached(fact, unpack(key, i));
        Int cp = c * prod;
        mass_sum += cp;
        for (int i = 0; i < m; ++i) lam_sum[i] += cp * (unpack(key, i) + 1);
    }
    Rat base = S.abs_det() * scale;
    Moments out;
    out.mass = base * Rat(mass_sum) / Rat(factorial_cached(fact, degree + d));
    out.first.assign(d, Rat(0));
    Rat denom = Rat(factorial_cached(fact, degree + 1 + d));
    for (int i = 0; i < m; ++i) {
        Rat li = base * Rat(lam_sum[i]) / denom;
        for (int k = 0; k < d; ++k) out.first[k] += S.vertices[i][k] * li;
    }
    return out;
}

}  // namespace

void HPolytope::add(const std::vector<Rat>& a, const Rat& b) {
    if (static_cast<int>(a.size()) != d) throw ParamError("inequality has the wrong length");
    ineqs.push_back({a, b});
}

void HPolytope::add_bounds(int i, const Rat& lo, const Rat& hi) {
    std::vector<Rat> a(d, Rat(0));
    a[i] = 1;
    add(a, hi);
    a[i] = -1;
    add(a, -lo);
}

bool HPolytope::contains(const Point& x) const {
    for (const auto& q : ineqs)
        if (dot(q.a, x) > q.b) return false;
    return true;
}

HPolytope HPolytope::affine_image(const RatMatrix& A, const Point& c) const {
    if (A.rows() != d || A.cols() != d || static_cast<int>(c.size()) != d) throw ParamError("affine map has the wrong shape");
    RatMatrix At(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) At(i, j) = A(j, i);
    HPolytope out(d);
    for (const auto& q : ineqs) {
        auto a2 = solve(At, q.a);
        if (!a2) throw ParamError("affine map is singular");
        out.add(*a2, q.b + dot(*a2, c));
    }
    return out;
}

Rat Simplex::abs_det() const {
    int d = static_cast<int>(vertices.size()) - 1;
    RatMatrix M(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M(i, j) = vertices[i + 1][j] - vertices[0][j];
    return abs(det(M));
}

Rat Simplex::volume() const {
    int d = static_cast<int>(vertices.size()) - 1;
    return abs_det() / Rat(factorial(d));
}

bool is_bounded(const HPolytope& P) {
    check_dim(P);
    std::vector<Inequality> cone;
    for (const auto& q : P.ineqs) cone.push_back({q.a, Rat(0)});
    for (int i = 0; i < P.d; ++i) {
        std::vector<Rat> a(P.d, Rat(0));
        a[i] = 1;
        cone.push_back({a, Rat(1)});
        a[i] = -1;
        cone.push_back({a, Rat(1)});
    }
    for (const auto& v : raw_vertices(P.d, cone))
        for (const auto& x : v)
            if (x != 0) return false;
    return true;
}

std::vector<Point> vertices(const HPolytope& P) {
    check_dim(P);
    if (!is_bounded(P)) throw ParamError("polytope is unbounded");
    auto v = raw_vertices(P.d, P.ineqs);
    if (v.empty()) throw ParamError("polytope is empty");
    return v;
}

std::vector<Simplex> triangulate(const HPolytope& P) {
    auto pts = vertices(P);
    std::vector<int> all(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
    if (affine_dim(pts, all) != P.d) throw ParamError("polytope is not full-dimensional");
    Triangulator t(P, pts);
    std::vector<Simplex> out;
    for (const auto& ids : t.run(all, P.d)) {
        Simplex s;
        for (int i : ids) s.vertices.push_back(pts[i]);
        out.push_back(std::move(s));
    }
    return out;
}

Rat volume(const HPolytope& P) {
    Rat v = 0;
    for (const auto& s : triangulate(P)) v += s.volume();
    return v;
}

Rat integrate(const MultiPoly& f, const Simplex& S) {
    int d = static_cast<int>(S.vertices.size()) - 1;
    if (f.nvars() != d) throw ParamError("polynomial and simplex dimensions differ");
    RatMatrix A(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) A(i, j) = S.vertices[j + 1][i] - S.vertices[0][i];
    MultiPoly g = f.affine_substitute(A, S.vertices[0]);
    Rat total = 0;
    for (const auto& [e, c] : g.terms()) {
        Int num = 1;
        unsigned deg = 0;
        for (int x : e) {
            num *= factorial(static_cast<unsigned>(x));
            deg += static_cast<unsigned>(x);
        }
        total += c * Rat(num) / Rat(factorial(deg + static_cast<unsigned>(d)));
    }
    return total * S.abs_det();
}

Rat integrate(const MultiPoly& f, const HPolytope& P) {
    if (f.nvars() != P.d) throw ParamError("polynomial and polytope dimensions differ");
    auto simplices = triangulate(P);
    std::vector<Rat> parts(simplices.size());
    parallel_for(simplices.size(), [&](std::size_t i) { parts[i] = integrate(f, simplices[i]); });
    Rat total = 0;
    for (const auto& x : parts) total += x;
    return total;
}

Rat LinearForm::operator()(const Point& x) const { return c + dot(a, x); }

MultiPoly FactoredPoly::expand() const {
    MultiPoly f = MultiPoly::constant(d, scale);
    for (const auto& [lf, power] : factors) f = f * MultiPoly::linear(lf.a, lf.c).pow(power);
    return f;
}

Moments integrate_moments(const FactoredPoly& rho, const HPolytope& P) {
    if (rho.d != P.d) throw ParamError("density and polytope dimensions differ");
    for (const auto& [lf, power] : rho.factors)
        if (static_cast<int>(lf.a.size()) != rho.d) throw ParamError("linear factor has the wrong length");
    auto simplices = triangulate(P);
    std::vector<Moments> parts(simplices.size());
    parallel_for(simplices.size(), [&](std::size_t i) { parts[i] = simplex_moments(rho, simplices[i]); });
    Moments total{Rat(0), std::vector<Rat>(P.d, Rat(0))};
    for (const auto& m : parts) {
        total.mass += m.mass;
        for (int k = 0; k < P.d; ++k) total.first[k] += m.first[k];
    }
    return total;
}

HPolytope read_polytope(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Inequality> rows;
    int d = -1, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        std::string where = "line " + std::to_string(lineno);
        if (tag != "ineq:") throw ParamError(where + ": expected 'ineq:'");
        std::vector<Rat> a;
        std::string tok;
        bool rel = false;
        while (ls >> tok) {
            if (tok == "<=") {
                rel = true;
                break;
            }
            a.push_back(parse_rat(tok));
        }
        if (!rel) throw ParamError(where + ": missing '<='");
        if (!(ls >> tok)) throw ParamError(where + ": missing right-hand side");
        Rat b = parse_rat(tok);
        if (ls >> tok) throw ParamError(where + ": trailing tokens");
        if (d < 0) d = static_cast<int>(a.size());
        if (static_cast<int>(a.size()) != d || d == 0) throw ParamError(where + ": coefficient count differs");
        rows.push_back({a, b});
    }
    if (d < 0) throw ParamError("polytope file has no inequalities");
    HPolytope P(d);
    P.ineqs = rows;
    return P;
}

std::string write_polytope(const HPolytope& P) {
    std::ostringstream os;
    for (const auto& q : P.ineqs) {
        os << "ineq:";
        for (const auto& x : q.a) os << " " << to_string(x);
        os << " <= " << to_string(q.b) << "\n";
    }
    return os.str();
}

}  // namespace artifact
