#include "artifact/ke.hpp"

#include "artifact/errors.hpp"
#include "artifact/index.hpp"

#include <algorithm>
#include <map>

namespace artifact {

namespace {

Rat half(int n) { return rat(n, 2); }

void require_M_rank(int s, int p, int n) {
    if (rank(s, p, n) < 2) throw ParamError("M with r = 1 is homogeneous; its moment region is a point");
}

// Index of the first free chi-coordinate: T keeps X_1 free, M pins it.
int first_free(Space space) { return space == Space::T ? 1 : 2; }

Point to_point(const Coweight& c) {
    Point out;
    for (const auto& x : c) out.push_back(Rat(x));
    return out;
}

Rat dot(const Point& a, const Point& b) {
    Rat t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
    return t;
}

}  // namespace

AmbientWeight two_rho_P(int s, int p, int n) {
    require_normalized(s, p, n);
    AmbientWeight w;
    int r = rank(s, p, n);
    Rat h = half(n);
    if (p <= n - s) {
        for (int i = 1; i <= r; ++i) w.chi.push_back((Rat(s + i - 1) - h) * Rat(p + 1 - i));
        w.tau.assign(s - p, Rat(-p));
        w.kappa.assign(n - s - p, Rat(-p));
    } else {
        for (int i = 1; i <= r; ++i) w.chi.push_back((h - Rat(p - i + 1)) * Rat(n - s + 1 - i));
        w.tau.assign(s - p, Rat(-p));
        w.kappa.assign(s + p - n, Rat(n - p));
    }
    w.eps.assign(r, h - Rat(p));
    return w;
}

FactoredPoly dh_density(int s, int p, int n, Space space) {
    require_normalized(s, p, n);
    if (space == Space::M) require_M_rank(s, p, n);
    int r = rank(s, p, n);
    auto w2 = two_rho_P(s, p, n);
    int f0 = first_free(space);
    int d = r - f0 + 1;

    // X_1..X_{r+1} as affine forms in the free variables; X_{r+1} = 0.
    std::vector<LinearForm> X(r + 2, LinearForm{std::vector<Rat>(d, Rat(0)), Rat(0)});
    for (int i = 1; i <= r; ++i) {
        if (i < f0)
            X[i].c = w2.chi[i - 1];
        else
            X[i].a[i - f0] = 1;
    }
    auto combo = [&](const LinearForm& u, const Rat& su, const LinearForm& v, const Rat& sv, const Rat& c) {
        LinearForm out{std::vector<Rat>(d), c};
        for (int k = 0; k < d; ++k) out.a[k] = su * u.a[k] + sv * v.a[k];
        out.c += su * u.c + sv * v.c;
        return out;
    };
    LinearForm zero{std::vector<Rat>(d, Rat(0)), Rat(0)};
    std::vector<LinearForm> diff(r + 1);
    for (int i = 1; i <= r; ++i) diff[i] = combo(X[i + 1], Rat(1), X[i], Rat(-1), Rat(0));

    std::map<std::pair<std::vector<Rat>, Rat>, unsigned> powers;
    FactoredPoly rho;
    rho.d = d;
    auto push = [&](const LinearForm& f) {
        bool constant = true;
        for (const auto& x : f.a)
            if (x != 0) constant = false;
        if (constant) {
            if (f.c == 0) throw CrossCheckError("density vanishes identically");
            if (f.c < 0) rho.scale = -rho.scale;
            return;
        }
        ++powers[{f.a, f.c}];
    };
    const auto& y = w2.eps;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            push(combo(diff[i], Rat(1), diff[j], Rat(-1), y[i - 1] - y[j - 1]));
            push(combo(diff[i], Rat(1), diff[j], Rat(-1), y[j - 1] - y[i - 1]));
        }
    for (int i = 1; i <= r; ++i) {
        for (const auto& wj : w2.kappa) {
            if (p <= n - s)
                push(combo(diff[i], Rat(1), zero, Rat(0), y[i - 1] - wj));
            else
                push(combo(diff[i], Rat(1), zero, Rat(0), wj - y[i - 1]));
        }
        for (const auto& zj : w2.tau) push(combo(diff[i], Rat(-1), zero, Rat(0), y[i - 1] - zj));
    }
    if (p > n - s)
        for (const auto& zi : w2.tau)
            for (const auto& wj : w2.kappa) push(LinearForm{std::vector<Rat>(d, Rat(0)), wj - zi});
    for (const auto& [key, e] : powers) rho.factors.push_back({LinearForm{key.first, key.second}, e});
    return rho;
}

QData build_Q_and_dual(int s, int p, int n, Space space) {
    require_normalized(s, p, n);
    int r = rank(s, p, n);
    auto wd = weight_data(s, p, n);
    QData q;
    q.space = space;
    if (space == Space::T) {
        q.dim = r;
        auto c = bform_coefficients_T(s, p, n);
        for (int j = 0; j <= r; ++j) {
            if (c[j] == 0) continue;
            Point g = to_point(wd.rho_B[j]);
            for (auto& x : g) x /= Rat(c[j]);
            q.names.push_back("rho(B_" + std::to_string(j) + ")/" + to_string(c[j]));
            q.generators.push_back(g);
        }
        for (int i = 1; i <= r; ++i) {
            q.names.push_back("v(D-_" + std::to_string(i) + ")");
            q.generators.push_back(to_point(wd.v_D_minus[i - 1]));
        }
        for (int i = 1; i <= r; ++i) {
            q.names.push_back("v(D+_" + std::to_string(i) + ")");
            q.generators.push_back(to_point(wd.v_D_plus[i - 1]));
        }
    } else {
        require_M_rank(s, p, n);
        q.dim = r - 1;
        auto c = bform_coefficients_M(s, p, n);
        for (int j = 0; j <= r; ++j) {
            if (c[j] == 0 || (j == 0 && !wd.has_Bcheck0)) continue;
            Point g = to_point(wd.rho_Bcheck[j]);
            for (auto& x : g) x /= Rat(c[j]);
            q.names.push_back("rho(Bc_" + std::to_string(j) + ")/" + to_string(c[j]));
            q.generators.push_back(g);
        }
        for (int i = 2; i <= r; ++i) {
            q.names.push_back("v(Dc_" + std::to_string(i) + ")");
            q.generators.push_back(to_point(wd.v_D_check[i - 2]));
        }
    }
    q.dual = HPolytope(q.dim);
    for (const auto& g : q.generators) q.dual.add(g, Rat(1));

    // A generator is a vertex of Q exactly when it is the normal of a facet of Q*.
    auto verts = vertices(q.dual);
    std::vector<Point> seen;
    for (const auto& g : q.generators) {
        if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
        seen.push_back(g);
        std::vector<Point> tight;
        for (const auto& v : verts)
            if (dot(g, v) == 1) tight.push_back(v);
        if (tight.empty()) continue;
        RatMatrix M(static_cast<int>(tight.size()) - 1, q.dim);
        for (std::size_t i = 1; i < tight.size(); ++i)
            for (int k = 0; k < q.dim; ++k) M(static_cast<int>(i) - 1, k) = tight[i][k] - tight[0][k];
        int dim = tight.size() == 1 ? 0 : rank(M);
        if (dim == q.dim - 1) q.vertices.push_back(g);
    }
    return q;
}

HPolytope moment_region(int s, int p, int n, Space space) {
    auto q = build_Q_and_dual(s, p, n, space);
    auto w2 = two_rho_P(s, p, n);
    int f0 = first_free(space);
    Point shift(w2.chi.begin() + (f0 - 1), w2.chi.end());
    HPolytope out(q.dim);
    for (const auto& ineq : q.dual.ineqs) out.add(ineq.a, ineq.b + dot(ineq.a, shift));
    return out;
}

KECase normalize_case(Space space, int s, int p, int n) {
    validate({s, p, n});
    KECase c{space, s, p, n, {}};
    bool t = space == Space::T;
    if (2 * c.p > n) {
        c.p = n - c.p;
        c.trail.push_back(t ? "DUAL" : "Dual");
    }
    if (2 * c.s < n) {
        c.s = n - c.s;
        c.trail.push_back(t ? "USD" : "Usd");
    }
    if (!t && c.p < n - c.s) {
        int s2 = n - c.p, p2 = n - c.s;
        c.s = s2;
        c.p = p2;
        c.trail.push_back("swap");
    }
    return c;
}

namespace {

struct Integrated {
    Rat mass;
    std::vector<Rat> first;  // over X_{f0}..X_r
    std::vector<std::pair<std::string, Rat>> named;
};

Integrated integrate_case(int s, int p, int n, Space space) {
    auto rho = dh_density(s, p, n, space);
    auto region = moment_region(s, p, n, space);
    auto m = integrate_moments(rho, region);
    Integrated out{m.mass, m.first, {}};
    out.named.push_back({"int rho", m.mass});
    int f0 = first_free(space);
    for (std::size_t k = 0; k < m.first.size(); ++k)
        out.named.push_back({"int x" + std::to_string(k + f0) + " rho", m.first[k]});
    return out;
}

}  // namespace

KEResult ke_test_T(int s, int p, int n) {
    KEResult res;
    res.normalized = normalize_case(Space::T, s, p, n);
    const auto& c = res.normalized;
    int r = rank(c.s, c.p, c.n);
    if (r >= 3) throw ParamError("T_{" + std::to_string(s) + "," + std::to_string(p) + "," + std::to_string(n) + "} is not Fano (r = " + std::to_string(r) + " >= 3)");
    auto in = integrate_case(c.s, c.p, c.n, Space::T);
    res.integrals = in.named;
    auto w2 = two_rho_P(c.s, c.p, c.n);
    bool all = true;
    for (int k = 1; k <= r; ++k) {
        Rat rel = in.first[k - 1] - w2.chi[k - 1] * in.mass;
        KECondition cond;
        cond.name = "int (x" + std::to_string(k) + " - " + to_string(w2.chi[k - 1]) + ") rho";
        cond.relation = k == 1 ? "=" : ">";
        cond.lhs = rel;
        cond.rhs = 0;
        cond.holds = k == 1 ? rel == 0 : rel > 0;
        all = all && cond.holds;
        res.conditions.push_back(cond);
    }
    if (r == 1 && c.p == 1 && c.n - c.s >= 2) {
        res.method = "closed-form";
        res.ke = c.n == 2 * c.s;
    } else {
        res.method = "barycenter";
        res.ke = all;
    }
    return res;
}

KEResult ke_test_M(int s, int p, int n) {
    KEResult res;
    res.normalized = normalize_case(Space::M, s, p, n);
    const auto& c = res.normalized;
    int r = rank(c.s, c.p, c.n);
    if (r == 1) {
        res.method = "homogeneous";
        res.ke = true;
        return res;
    }
    auto in = integrate_case(c.s, c.p, c.n, Space::M);
    res.integrals = in.named;
    res.method = "barycenter";
    auto w2 = two_rho_P(c.s, c.p, c.n);
    res.ke = true;
    for (int k = 2; k <= r; ++k) {
        KECondition cond;
        cond.name = "int x" + std::to_string(k) + " rho / int rho";
        cond.relation = ">";
        cond.lhs = in.first[k - 2] / in.mass;
        cond.rhs = w2.chi[k - 1];
        cond.holds = cond.lhs > cond.rhs;
        res.ke = res.ke && cond.holds;
        res.conditions.push_back(cond);
    }
    return res;
}

}  // namespace artifact
