#include "artifact/curves.hpp"

#include "artifact/errors.hpp"
#include "artifact/index.hpp"
#include "artifact/parallel.hpp"

#include <sstream>

namespace artifact {

namespace {

struct Params {
    int s, p, n, r;
};

Params params(int s, int p, int n) {
    require_normalized(s, p, n);
    return {s, p, n, rank(s, p, n)};
}

[[noreturn]] void bad_range(const CurveId& id, const std::string& what) {
    throw ParamError("invalid curve " + id.to_string() + ": needs " + what);
}

std::string range(const char* name, int lo, int hi) {
    std::ostringstream os;
    os << lo << " <= " << name << " <= " << hi;
    return os.str();
}

void check(const CurveId& id, const char* name, int x, int lo, int hi) {
    if (x < lo || x > hi) bad_range(id, range(name, lo, hi));
}

// Entries whose index leaves [1,r] are dropped.
struct Builder {
    int r;
    CurveClass c;
    explicit Builder(int rank) : r(rank) {
        c.h = 0;
        c.minus.assign(r, Int(0));
        c.plus.assign(r, Int(0));
    }
    void minus(int i, int x) {
        if (i >= 1 && i <= r) c.minus[i - 1] += x;
    }
    void plus(int i, int x) {
        if (i >= 1 && i <= r) c.plus[i - 1] += x;
    }
};

struct Evaluated {
    CurveClass cls;
    Int antik;
};

// Dom1 chart of zeta^{l,k}_{u,v} (k <= r-l): lines leaving the index q = l+k.
void zeta_dom1(const Params& P, const CurveId& id, Builder& b, Int& val, bool& have) {
    int s = P.s, p = P.p, n = P.n, r = P.r, l = id.l, k = id.k, u = id.u, v = id.v;
    int q = l + k;
    if ((u == q && v == s + q + 1) || (v == s + q && u == q + 1)) {
        b.minus(q, -1), b.minus(q + 1, 2), b.minus(q + 2, -1);
    } else if (u == q) {
        b.minus(q, -1), b.minus(q + 1, 1), b.minus(v - s, 1), b.minus(v - s + 1, -1);
    } else {
        b.minus(q, -1), b.minus(q + 1, 1), b.minus(u, 1), b.minus(u + 1, -1);
    }
    have = true;
    bool inner = k <= r - l - 1, last = k == r - l;
    int w = u == q ? v - s : u;  // position of the moving index
    if (u == q && s + q + 1 <= v && v <= r + s - 1)
        val = 2 * (v - s - q);
    else if (u != q && q + 1 <= u && u <= r - 1)
        val = 2 * (u - q);
    else if (w == r && inner)
        val = 2 * (r - q) + 1;
    else if (w >= r + 1 && inner)
        val = n - s + p - 2 * q + 1;
    else if (w >= r + 1 && last)
        val = n - s + p - 2 * r;
    else
        have = false;
}

// Dom2 chart of zeta^{l,k}_{u,v} (k > r-l).
void zeta_dom2(const Params& P, const CurveId& id, Builder& b, Int& val, bool& have) {
    int s = P.s, p = P.p, r = P.r, k = id.k, u = id.u, v = id.v;
    int a = s - p + r - k;
    if ((u == r - k + 1 && v == a) || (v == a + 1 && u == r - k)) {
        b.plus(k, -1), b.plus(k + 1, 2), b.plus(k + 2, -1);
    } else if (u == r - k + 1) {
        b.plus(k, -1), b.plus(k + 1, 1), b.plus(s - p + r + 1 - v, 1), b.plus(s - p + r + 2 - v, -1);
    } else {
        b.plus(k, -1), b.plus(k + 1, 1), b.plus(r + 1 - u, 1), b.plus(r + 2 - u, -1);
    }
    have = true;
    if (u == r - k + 1) {
        if (s - p + 2 <= v && v <= a)
            val = 2 * (a + 1 - v);
        else if (v == s - p + 1 && k <= r - 1)
            val = 2 * (r - k) + 1;
        else if (v <= s - p && k <= r - 1)
            val = 2 * (r - k) + s - p + 1;
        else if (v <= s - p && k == r)
            val = s - p;
        else
            have = false;
    } else {
        if (2 <= u && u <= r - k)
            val = 2 * (r - k + 1 - u);
        else if (u == 1 && k <= r - 1)
            val = 2 * (r - k) + 1;
        else
            have = false;
    }
}

void validate_params(const Params& P, const CurveId& id) {
    int s = P.s, p = P.p, n = P.n, r = P.r;
    switch (id.family) {
        case CurveFamily::Gamma:
            check(id, "l", id.l, 0, r - 1);
            break;
        case CurveFamily::Zeta:
            check(id, "l", id.l, 0, r);
            if (!((2 <= id.j && id.j <= r - id.l) || (r - id.l + 2 <= id.j && id.j <= r)))
                bad_range(id, "2 <= j <= r-l or r-l+2 <= j <= r");
            break;
        case CurveFamily::ZetaK: {
            check(id, "l", id.l, 0, r);
            check(id, "k", id.k, 1, r);
            int u = id.u, v = id.v, k = id.k;
            if (k <= r - id.l) {
                int q = id.l + k;
                bool ok = (u == q && s + q + 1 <= v && v <= n) || (v == s + q && q + 1 <= u && u <= p);
                if (!ok) bad_range(id, "u = l+k, s+l+k+1 <= v <= n, or v = s+l+k, l+k+1 <= u <= p");
            } else {
                int a = s - p + r - k;
                bool ok = (u == r - k + 1 && 1 <= v && v <= a) || (v == a + 1 && 1 <= u && u <= r - k);
                if (!ok) bad_range(id, "u = r-k+1, 1 <= v <= s-p+r-k, or v = s-p+r-k+1, 1 <= u <= r-k");
            }
            break;
        }
        case CurveFamily::Delta:
            check(id, "l", id.l, 0, r);
            if (id.l < r) {
                check(id, "m1", id.m1, 1, p - id.l);
                check(id, "m2", id.m2, 1, s - p + id.l);
            } else {
                check(id, "m1", id.m1, 1, s + p - n);
                check(id, "m2", id.m2, 1, n - p);
            }
            break;
        case CurveFamily::DeltaCap:
            check(id, "l", id.l, 1, r);
            check(id, "m1", id.m1, 1, n - s - id.l);
            check(id, "m2", id.m2, 1, id.l);
            break;
    }
}

Evaluated evaluate(const Params& P, const CurveId& id) {
    validate_params(P, id);
    int s = P.s, p = P.p, n = P.n, r = P.r, l = id.l;
    Builder b(r);
    Int val;
    bool have = true;
    switch (id.family) {
        case CurveFamily::Gamma:
            b.c.h = 1;
            b.minus(l + 1, 1), b.minus(l + 2, -1);
            b.plus(r - l, 1), b.plus(r - l + 1, -1);
            val = r == 1 ? 2 : (l == 0 || l == r - 1 ? 1 : 0);
            break;
        case CurveFamily::Zeta: {
            int j = id.j;
            if (j <= r - l) {
                b.minus(l + j - 1, -1), b.minus(l + j, 2), b.minus(l + j + 1, -1);
                val = j == r - l ? 3 : 2;
            } else {
                b.plus(j - 1, -1), b.plus(j, 2), b.plus(j + 1, -1);
                val = j == r ? 3 : 2;
            }
            break;
        }
        case CurveFamily::ZetaK:
            if (id.k <= r - l)
                zeta_dom1(P, id, b, val, have);
            else
                zeta_dom2(P, id, b, val, have);
            break;
        case CurveFamily::Delta: {
            int m1 = id.m1, m2 = id.m2;
            b.c.h = 1;
            if (l < r) {
                b.minus(l + m1, 1), b.minus(l + m1 + 1, -1);
                b.plus(r - l + m2, 1), b.plus(r - l + m2 + 1, -1);
                int A = m1 <= r - l - 1 ? 0 : (m1 == r - l ? 1 : 2);
                int B = m2 <= l - 1 ? 0 : (m2 == l ? 1 : 2);
                int tbl[3][3] = {{2 * m1 + 2 * m2 - 2, 2 * m1 + 2 * l - 1, 2 * m1 + 2 * l - 1 + s - p},
                                 {2 * (r - l + m2) - 1, 2 * r, 2 * r + s - p},
                                 {2 * (r - l + m2) - 1 + s + p - n, n - s + p, n}};
                val = tbl[A][B];
            } else {
                b.plus(m2, 1), b.plus(m2 + 1, -1);
                val = m2 <= r - 1 ? 2 * m2 + s + p - n - 1 : (m2 == r ? n - s + p : n);
            }
            break;
        }
        case CurveFamily::DeltaCap: {
            int m1 = id.m1, m2 = id.m2;
            b.c.h = 1;
            b.minus(l + m1, 1), b.minus(l + m1 + 1, -1);
            b.plus(r - l + m2, 1), b.plus(r - l + m2 + 1, -1);
            int A = m1 <= r - l - 1 ? 0 : (m1 == r - l ? 1 : 2);
            int B = m2 <= l - 1 ? 0 : 1;
            int tbl[3][2] = {{2 * m1 + 2 * m2 - 2, 2 * m1 + 2 * l - 1},
                             {2 * (r - l + m2) - 1, 2 * r},
                             {2 * (r - l + m2) - 1 + n - s - p, n - s + p}};
            val = tbl[A][B];
            break;
        }
    }
    if (!have) throw CrossCheckError("no closed-form degree for " + id.to_string());
    return {b.c, val};
}

Rat pair_full(const FullVector& d, const CurveClass& c) {
    int r = static_cast<int>(c.minus.size());
    if (static_cast<int>(d.size()) != 2 * r + 1) throw ParamError("divisor and curve have different ranks");
    Rat total = d[0] * c.h;
    for (int i = 1; i <= r; ++i) {
        total += d[i] * c.plus[i - 1];
        total += d[r + i] * c.minus[i - 1];
    }
    return total;
}

}  // namespace

std::string CurveId::to_string() const {
    std::ostringstream os;
    switch (family) {
        case CurveFamily::Gamma: os << "gamma_" << l; break;
        case CurveFamily::Zeta: os << "zeta^" << l << "_" << j; break;
        case CurveFamily::ZetaK: os << "zeta^{" << l << "," << k << "}_{" << u << "," << v << "}"; break;
        case CurveFamily::Delta: os << "delta^" << l << "_{" << m1 << "," << m2 << "}"; break;
        case CurveFamily::DeltaCap: os << "Delta^" << l << "_{" << m1 << "," << m2 << "}"; break;
    }
    return os.str();
}

bool CurveId::operator==(const CurveId& o) const {
    return family == o.family && l == o.l && j == o.j && k == o.k && u == o.u && v == o.v && m1 == o.m1 && m2 == o.m2;
}

std::vector<CurveId> enumerate_curves(int s, int p, int n) {
    Params P = params(s, p, n);
    int r = P.r;
    std::vector<CurveId> out;
    for (int l = 0; l < r; ++l) out.push_back({CurveFamily::Gamma, l});
    for (int l = 0; l <= r; ++l) {
        for (int j = 2; j <= r; ++j)
            if (j <= r - l || j >= r - l + 2) out.push_back({CurveFamily::Zeta, l, j});
        for (int k = 1; k <= r; ++k) {
            auto add = [&](int u, int v) { out.push_back({CurveFamily::ZetaK, l, 0, k, u, v}); };
            if (k <= r - l) {
                int q = l + k;
                for (int v = s + q + 1; v <= n; ++v) add(q, v);
                for (int u = q + 1; u <= p; ++u) add(u, s + q);
            } else {
                int a = s - p + r - k;
                for (int v = 1; v <= a; ++v) add(r - k + 1, v);
                for (int u = 1; u <= r - k; ++u) add(u, a + 1);
            }
        }
        int m1max = l < r ? p - l : s + p - n, m2max = l < r ? s - p + l : n - p;
        for (int m1 = 1; m1 <= m1max; ++m1)
            for (int m2 = 1; m2 <= m2max; ++m2) out.push_back({CurveFamily::Delta, l, 0, 0, 0, 0, m1, m2});
        if (l >= 1)
            for (int m1 = 1; m1 <= n - s - l; ++m1)
                for (int m2 = 1; m2 <= l; ++m2) out.push_back({CurveFamily::DeltaCap, l, 0, 0, 0, 0, m1, m2});
    }
    return out;
}

void validate_curve(int s, int p, int n, const CurveId& id) { validate_params(params(s, p, n), id); }

CurveClass curve_class(int s, int p, int n, const CurveId& id) { return evaluate(params(s, p, n), id).cls; }

Rat pair(const FullVector& divisor, const CurveClass& c) { return pair_full(divisor, c); }

Int closed_form_antik(int s, int p, int n, const CurveId& id) { return evaluate(params(s, p, n), id).antik; }

Int antik_degree(int s, int p, int n, const CurveId& id) {
    Params P = params(s, p, n);
    auto e = evaluate(P, id);
    Rat a = -pair_full(canonical_T_full(s, p, n), e.cls);
    if (a != Rat(e.antik))
        throw CrossCheckError("-K." + id.to_string() + ": pairing gives " + to_string(a) + ", table gives " +
                              to_string(e.antik));
    return e.antik;
}

NefReport nef_ample_T(int s, int p, int n) {
    auto ids = enumerate_curves(s, p, n);
    std::vector<Int> deg(ids.size());
    parallel_for(ids.size(), [&](std::size_t i) { deg[i] = antik_degree(s, p, n, ids[i]); });
    NefReport rep;
    rep.curves = static_cast<int>(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i == 0 || deg[i] < rep.min_degree) rep.min_degree = deg[i];
        if (deg[i] == 0 && !rep.witness) rep.witness = ids[i];
    }
    rep.nef = rep.min_degree >= 0;
    rep.ample = rep.min_degree > 0;
    if (rep.ample) rep.witness.reset();
    return rep;
}

AmpleMReport ample_M(int s, int p, int n) {
    Params P = params(s, p, n);
    FullVector k = canonical_T_full(s, p, n);
    k[P.r + 1] += 1;  // K_T + D-_1
    AmpleMReport rep;
    for (const auto& id : enumerate_curves(s, p, n)) {
        if (id.l != 0 || id.family == CurveFamily::Gamma) continue;
        auto e = evaluate(P, id);
        Rat d = -pair_full(k, e.cls);
        if (d.get_den() != 1) throw CrossCheckError("non-integral degree on " + id.to_string());
        Int di = d.get_num();
        if (!rep.min_degree || di < *rep.min_degree) rep.min_degree = di;
        ++rep.curves;
    }
    rep.ample = !rep.min_degree || *rep.min_degree > 0;
    return rep;
}

}  // namespace artifact
