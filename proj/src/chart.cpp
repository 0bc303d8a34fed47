#include "artifact/chart.hpp"

#include "artifact/errors.hpp"
#include "artifact/plucker.hpp"

#include <algorithm>
#include <set>

namespace artifact {

namespace {

int chart_rank(const ChartIndex& c) { return std::min(c.p, c.n - c.s); }

int sign_of(int e) { return (e % 2 + 2) % 2 ? -1 : 1; }

void require(bool ok, const std::string& msg) {
    if (!ok) throw ParamError(msg);
}

/** Rows/cols of vector k (1-based) and the band it lives in. */
struct VectorSpec {
    CoordKind lead;
    int k, row, col;
    int row_lo, row_hi, col_lo, col_hi;
    std::vector<int> prev_rows, prev_cols;
};

std::vector<VectorSpec> vector_specs(const ChartIndex& c) {
    int r = chart_rank(c);
    std::vector<VectorSpec> out;
    for (int k = 1; k <= r; ++k) {
        bool is_b = k <= r - c.l;
        VectorSpec v{is_b ? CoordKind::B : CoordKind::A, k, c.rows[k - 1], c.cols[k - 1], 0, 0, 0, 0, {}, {}};
        if (is_b) {
            v.row_lo = c.l + 1, v.row_hi = c.p, v.col_lo = c.s + c.l + 1, v.col_hi = c.n;
        } else {
            v.row_lo = 1, v.row_hi = c.l, v.col_lo = 1, v.col_hi = c.s - c.p + c.l;
        }
        int first = is_b ? 1 : r - c.l + 1;
        for (int t = first; t < k; ++t) {
            v.prev_rows.push_back(c.rows[t - 1]);
            v.prev_cols.push_back(c.cols[t - 1]);
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

ChartCoord xi(int k, int row, int col) { return {CoordKind::Xi, k, row, col}; }

}  // namespace

ChartIndex canonical_chart(int s, int p, int n, int l) {
    validate({s, p, n});
    require(p <= s, "charts need p <= s; apply DUAL/USD first");
    int r = std::min(p, n - s);
    require(l >= 0 && l <= r, "chart index l=" + std::to_string(l) + " outside [0,r]");
    ChartIndex c{s, p, n, l, {}, {}};
    for (int k = 1; k <= r - l; ++k) {
        c.rows.push_back(l + k);
        c.cols.push_back(s + l + k);
    }
    for (int k = r - l + 1; k <= r; ++k) {
        c.rows.push_back(r + 1 - k);
        c.cols.push_back(s - p + r + 1 - k);
    }
    return c;
}

void validate_chart(const ChartIndex& c) {
    validate({c.s, c.p, c.n});
    require(c.p <= c.s, "charts need p <= s; apply DUAL/USD first");
    int r = chart_rank(c);
    require(c.l >= 0 && c.l <= r, "chart index l outside [0,r]");
    require(static_cast<int>(c.rows.size()) == r && static_cast<int>(c.cols.size()) == r,
            "chart label needs r rows and r columns");
    for (const auto& v : vector_specs(c)) {
        require(v.row >= v.row_lo && v.row <= v.row_hi, "chart row label out of its band");
        require(v.col >= v.col_lo && v.col <= v.col_hi, "chart column label out of its band");
        require(!contains(v.prev_rows, v.row) && !contains(v.prev_cols, v.col), "repeated chart label");
    }
}

bool is_canonical(const ChartIndex& c) {
    ChartIndex k = canonical_chart(c.s, c.p, c.n, c.l);
    return k.rows == c.rows && k.cols == c.cols;
}

std::string to_string(const ChartCoord& c) {
    auto rc = "_" + std::to_string(c.row) + "_" + std::to_string(c.col);
    switch (c.kind) {
        case CoordKind::X: return "x" + rc;
        case CoordKind::Y: return "y" + rc;
        case CoordKind::A: return "a" + rc;
        case CoordKind::B: return "b" + rc;
        case CoordKind::Xi: return "xi" + std::to_string(c.k) + rc;
    }
    return "?";
}

std::vector<ChartCoord> chart_coordinates(const ChartIndex& c) {
    validate_chart(c);
    std::vector<ChartCoord> out;
    for (int i = 1; i <= c.l; ++i)
        for (int col = c.s + c.l + 1; col <= c.n; ++col) out.push_back({CoordKind::X, 0, i, col});
    for (int i = c.l + 1; i <= c.p; ++i)
        for (int col = 1; col <= c.s - c.p + c.l; ++col) out.push_back({CoordKind::Y, 0, i, col});
    for (const auto& v : vector_specs(c)) {
        out.push_back({v.lead, v.k, v.row, v.col});
        for (int t = v.row_lo; t <= v.row_hi; ++t)
            if (t != v.row && !contains(v.prev_rows, t)) out.push_back(xi(v.k, t, v.col));
        for (int t = v.col_lo; t <= v.col_hi; ++t)
            if (t != v.col && !contains(v.prev_cols, t)) out.push_back(xi(v.k, v.row, t));
    }
    if (static_cast<long>(out.size()) != static_cast<long>(c.p) * (c.n - c.p))
        throw CrossCheckError("chart coordinate count differs from dim G(p,n)");
    return out;
}

const Rat& ChartPoint::operator[](const ChartCoord& c) const {
    auto it = values.find(c);
    if (it == values.end()) throw ParamError("chart point lacks coordinate " + to_string(c));
    return it->second;
}

ChartPoint zero_point(const ChartIndex& c) {
    ChartPoint pt;
    for (const auto& co : chart_coordinates(c)) pt.values.emplace(co, Rat(0));
    return pt;
}

ChartPoint random_point(const ChartIndex& c, std::mt19937_64& rng) {
    auto draw = [&rng](bool nonzero) {
        for (;;) {
            long num = static_cast<long>(rng() % 11) - 5;
            long den = static_cast<long>(rng() % 4) + 1;
            if (num != 0 || !nonzero) return rat(num, den);
        }
    };
    ChartPoint pt;
    for (const auto& co : chart_coordinates(c))
        pt.values.emplace(co, draw(co.kind == CoordKind::A || co.kind == CoordKind::B));
    return pt;
}

RatMatrix gamma(const ChartIndex& c, const ChartPoint& pt) {
    validate_chart(c);
    RatMatrix m(c.p, c.n);
    for (int i = 1; i <= c.l; ++i) {
        m(i - 1, c.s + i - 1) = 1;
        for (int col = c.s + c.l + 1; col <= c.n; ++col) m(i - 1, col - 1) = pt[{CoordKind::X, 0, i, col}];
    }
    for (int i = c.l + 1; i <= c.p; ++i) {
        m(i - 1, c.s - c.p + i - 1) = 1;
        for (int col = 1; col <= c.s - c.p + c.l; ++col) m(i - 1, col - 1) = pt[{CoordKind::Y, 0, i, col}];
    }
    // Each family (b-vectors, then a-vectors) carries a cumulative product of its leads.
    Rat prod_b = 1, prod_a = 1;
    for (const auto& v : vector_specs(c)) {
        Rat& prod = v.lead == CoordKind::B ? prod_b : prod_a;
        prod *= pt[{v.lead, v.k, v.row, v.col}];
        if (prod == 0) continue;
        std::vector<std::pair<int, Rat>> xs, os;
        for (int t = v.row_lo; t <= v.row_hi; ++t) {
            if (t == v.row) xs.emplace_back(t, Rat(1));
            else if (!contains(v.prev_rows, t)) xs.emplace_back(t, pt[xi(v.k, t, v.col)]);
        }
        for (int t = v.col_lo; t <= v.col_hi; ++t) {
            if (t == v.col) os.emplace_back(t, Rat(1));
            else if (!contains(v.prev_cols, t)) os.emplace_back(t, pt[xi(v.k, v.row, t)]);
        }
        for (const auto& [row, a] : xs)
            for (const auto& [col, b] : os) m(row - 1, col - 1) += prod * a * b;
    }
    return m;
}

namespace {

struct ClaimContext {
    const ChartIndex& c;
    const ChartPoint& pt;
    RatMatrix m;
    int r;

    Rat lead_a(int row) const { return pt[{CoordKind::A, r + 1 - row, row, c.s - c.p + row}]; }
    Rat lead_b(int row) const { return pt[{CoordKind::B, row - c.l, row, c.s + row}]; }

    Rat lead_product(int k) const {
        Rat v = 1;
        if (k < c.l)
            for (int t = 1; t <= c.l - k; ++t) {
                Rat f = lead_a(c.l + 1 - t);
                for (int e = 0; e < c.l - k + 1 - t; ++e) v *= f;
            }
        if (k > c.l)
            for (int t = 1; t <= k - c.l; ++t) {
                Rat f = lead_b(c.l + t);
                for (int e = 0; e < k - c.l + 1 - t; ++e) v *= f;
            }
        return v;
    }

    void check(ClaimReport& rep, const std::string& fam, int k, int mu, int nu, const IndexTuple& idx,
               const Rat& expected) const {
        ++rep.checked;
        Rat actual = minor(m, idx);
        if (actual != expected) rep.failures.push_back({fam, k, mu, nu, idx, expected, actual});
    }
};

void require_canonical(const ChartIndex& c) {
    validate_chart(c);
    require(is_canonical(c), "closed-form claims are stated for the canonical chart label");
}

}  // namespace

ClaimReport verify_claim_I(const ChartIndex& c, const ChartPoint& pt) {
    require_canonical(c);
    ClaimContext ctx{c, pt, gamma(c, pt), chart_rank(c)};
    ClaimReport rep;
    for (int k = 0; k <= ctx.r; ++k)
        ctx.check(rep, "I", k, 0, 0, index_I(c.s, c.p, c.n, k), sign_of(k * (c.p - k)) * ctx.lead_product(k));
    return rep;
}

ClaimReport verify_claim_III(const ChartIndex& c, const ChartPoint& pt) {
    require_canonical(c);
    ClaimContext ctx{c, pt, gamma(c, pt), chart_rank(c)};
    ClaimReport rep;
    const int s = c.s, p = c.p, n = c.n, l = c.l;
    for (int k = 0; k <= ctx.r; ++k) {
        Rat lp = ctx.lead_product(k);
        int base = k * (p - k);
        if (k < l) {
            int m = ctx.r - k;
            int mu = s - p + k + 1;
            for (int nu = 1; nu <= s - p + k; ++nu)
                ctx.check(rep, "III", k, mu, nu, index_I_mu_nu(s, p, n, k, mu, nu),
                          sign_of(base) * lp * pt[xi(m, k + 1, nu)]);
            if (k >= 1) {
                int nu = s + k + 1;
                for (int mu2 = s + 1; mu2 <= s + k; ++mu2)
                    ctx.check(rep, "III'", k, mu2, nu, index_I_star_mu_nu(s, p, n, k, mu2, nu),
                              sign_of(base + s + k + 1 - mu2) * lp * pt[xi(m, mu2 - s, s - p + k + 1)]);
                Rat val = ctx.lead_a(k) + pt[xi(m, k + 1, s - p + k)] * pt[xi(m, k, s - p + k + 1)];
                ctx.check(rep, "III'*", k, 0, 0, index_I_star(s, p, n, k), sign_of(base + 1) * lp * val);
            }
        }
        if (k > l) {
            int m = k - l;
            int mu = s + k;
            for (int nu = s + k + 1; nu <= n; ++nu)
                ctx.check(rep, "III''", k, mu, nu, index_I_star_mu_nu(s, p, n, k, mu, nu),
                          sign_of(base) * lp * pt[xi(m, k, nu)]);
            if (k <= p - 1) {
                int nu = s - p + k;
                for (int mu2 = s - p + k + 1; mu2 <= s; ++mu2)
                    ctx.check(rep, "III'''", k, mu2, nu, index_I_mu_nu(s, p, n, k, mu2, nu),
                              sign_of(base + mu2 - s + p - k) * lp * pt[xi(m, mu2 - s + p, s + k)]);
                if (k + 1 <= ctx.r) {
                    Rat val = ctx.lead_b(k + 1) + pt[xi(m, k, s + k + 1)] * pt[xi(m, k + 1, s + k)];
                    ctx.check(rep, "III'''*", k, 0, 0, index_I_star(s, p, n, k), sign_of(base + 1) * lp * val);
                }
            }
        }
        if (k == l) {
            for (int mu = s - p + k + 1; mu <= s; ++mu)
                for (int nu = 1; nu <= s - p + k; ++nu)
                    ctx.check(rep, "III''''y", k, mu, nu, index_I_mu_nu(s, p, n, k, mu, nu),
                              sign_of(base + mu - s + p - l + 1) * pt[{CoordKind::Y, 0, mu - s + p, nu}]);
            for (int mu = s + 1; mu <= s + k; ++mu)
                for (int nu = s + k + 1; nu <= n; ++nu)
                    ctx.check(rep, "III''''x", k, mu, nu, index_I_star_mu_nu(s, p, n, k, mu, nu),
                              sign_of(base + mu - s - l) * pt[{CoordKind::X, 0, mu - s, nu}]);
        }
    }
    return rep;
}

ClaimReport verify_claim_II(const ChartIndex& c, const ChartPoint& pt) {
    require_canonical(c);
    int r = chart_rank(c);
    ClaimReport rep;
    auto run = [&](const ChartCoord& lead, int k_lo, int k_hi, const std::string& fam) {
        ChartPoint q = pt;
        q.values[lead] = 0;
        PluckerVector v = plucker_vector(gamma(c, q));
        for (int k = std::max(k_lo, 0); k <= std::min(k_hi, c.p); ++k)
            for (const auto& [idx, val] : project_stratum(v, c.s, k)) {
                ++rep.checked;
                if (val != 0) rep.failures.push_back({fam, k, 0, 0, idx, Rat(0), val});
            }
    };
    for (int t = 1; t <= c.l; ++t) {
        int row = c.l + 1 - t;
        run({CoordKind::A, r + 1 - row, row, c.s - c.p + row}, 0, c.l - t, "II-a");
    }
    for (int t = 1; t <= r - c.l; ++t) run({CoordKind::B, t, c.l + t, c.s + c.l + t}, c.l + t, c.p, "II-b");
    return rep;
}

std::vector<CoordWeight> cstar_weights(const ChartIndex& c) {
    validate_chart(c);
    int r = chart_rank(c);
    std::vector<CoordWeight> out;
    if (c.l < r) out.push_back({{CoordKind::B, 1, c.rows[0], c.cols[0]}, +1});
    if (c.l > 0) {
        int k = r - c.l + 1;
        out.push_back({{CoordKind::A, k, c.rows[k - 1], c.cols[k - 1]}, -1});
    }
    return out;
}

ChartPoint cstar_act(const ChartIndex& c, const ChartPoint& pt, const Rat& lambda) {
    if (lambda == 0) throw ParamError("C* parameter must be nonzero");
    ChartPoint q = pt;
    for (const auto& w : cstar_weights(c)) {
        if (w.weight > 0) q.values[w.coord] *= lambda;
        else q.values[w.coord] /= lambda;
    }
    return q;
}

bool verify_cstar(const ChartIndex& c, const ChartPoint& pt, const Rat& lambda) {
    RatMatrix lhs = gamma(c, cstar_act(c, pt, lambda));
    RatMatrix left = RatMatrix::identity(c.p), right = RatMatrix::identity(c.n);
    for (int i = 0; i < c.l; ++i) left(i, i) = 1 / lambda;
    for (int j = c.s; j < c.n; ++j) right(j, j) = lambda;
    RatMatrix base = gamma(c, pt);
    if (!(lhs == left * base * right)) return false;
    PluckerVector a = plucker_vector(lhs), b = plucker_vector(base * right);
    if (!proportional(a.coords, b.coords)) return false;
    for (int k = 0; k <= c.p; ++k)
        if (!proportional(project_stratum(a, c.s, k), project_stratum(b, c.s, k))) return false;
    return true;
}

}  // namespace artifact
