#include "artifact/chart.hpp"
#include "artifact/curves.hpp"
#include "artifact/errors.hpp"
#include "artifact/index.hpp"
#include "artifact/ke.hpp"
#include "artifact/picard.hpp"
#include "artifact/plucker.hpp"
#include "artifact/polytope.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace artifact;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
    if (cond) return;
    if (o.ok) o.detail = what;
    o.ok = false;
}

std::string triple(int s, int p, int n) {
    return "(" + std::to_string(s) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

void for_normalized(int nmax, const std::function<void(int, int, int)>& body) {
    for (int n = 2; n <= nmax; ++n)
        for (int p = 1; 2 * p <= n; ++p)
            for (int s = (n + 1) / 2; s < n; ++s) body(s, p, n);
}

Rat integral(const KEResult& r, const std::string& name) {
    for (const auto& [k, v] : r.integrals)
        if (k == name) return v;
    throw CrossCheckError("missing integral " + name);
}

HPolytope omega_plus() {
    HPolytope P(2);
    P.add_bounds(0, 0, 1);
    P.add({Rat(0), Rat(-1)}, 0);
    P.add({Rat(-1), Rat(1)}, 4);
    P.add({Rat(1), Rat(1)}, 4);
    return P;
}

HPolytope box(int d, long lo, long hi) {
    HPolytope P(d);
    for (int i = 0; i < d; ++i) P.add_bounds(i, lo, hi);
    return P;
}

HPolytope standard_simplex(int d) {
    HPolytope P(d);
    for (int i = 0; i < d; ++i) {
        std::vector<Rat> a(d, Rat(0));
        a[i] = -1;
        P.add(a, 0);
    }
    P.add(std::vector<Rat>(d, Rat(1)), 1);
    return P;
}

MultiPoly random_poly(int d, std::mt19937& gen) {
    std::uniform_int_distribution<int> coef(-3, 3);
    MultiPoly f(d);
    for (int t = 0; t < 4; ++t) {
        Exponent e(d);
        for (auto& x : e) x = std::abs(coef(gen));
        f.add_term(e, Rat(coef(gen)));
    }
    return f;
}

Outcome criterion1() {
    Outcome o;
    auto r = ke_test_M(4, 4, 8);
    expect(o, integral(r, "int rho") == Rat("2243664235225939/567567000"), "int rho");
    expect(o, integral(r, "int x2 rho") == Rat("55382785289338434218971/4067390354227200"), "int x2 rho");
    expect(o, integral(r, "int x3 rho") == Rat("5416920544038914803/305543145600"), "int x3 rho");
    expect(o, integral(r, "int x4 rho") == integral(r, "int x2 rho"), "int x4 rho != int x2 rho");
    if (o.ok) o.detail = "4 integrals exact";
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto r = ke_test_M(5, 5, 10);
    Rat outer("1760441835266075955851497040448393302143609/521057531362788347090042880000");
    Rat inner("2567995351960762288549954674509341582094471/521057531362788347090042880000");
    expect(o, integral(r, "int rho") == Rat("57336210099961579033706793911/74803289175014400"), "int rho");
    expect(o, integral(r, "int x2 rho") == outer && integral(r, "int x5 rho") == outer, "int x2 rho / int x5 rho");
    expect(o, integral(r, "int x3 rho") == inner && integral(r, "int x4 rho") == inner, "int x3 rho / int x4 rho");
    expect(o, r.ke, "decision is not KE");
    if (o.ok) o.detail = "integrals exact, decision KE";
    return o;
}

Outcome criterion3() {
    using Clock = std::chrono::steady_clock;
    Outcome o;
    auto P = omega_plus();
    auto y1 = MultiPoly::variable(2, 0), y2 = MultiPoly::variable(2, 1);
    auto two = MultiPoly::constant(2, Rat(2));
    auto f = (y2 - two) * y2.pow(2);
    expect(o, integrate(f, P) == rat(593, 60), "s = 2");
    HPolytope lo = P, hi = P;
    lo.add({Rat(0), Rat(1)}, 2);
    hi.add({Rat(0), Rat(-1)}, -2);
    expect(o, integrate(f, hi) - integrate(f, lo) == rat(251, 20), "absolute value");

    const Rat expected[] = {Rat("43301123/9797760"), Rat("196456943526409/45343781683200")};
    double worst = 0;
    for (int s = 3; s <= 4; ++s) {
        auto t0 = Clock::now();
        Rat q = Rat(4 * s * s);
        auto base = MultiPoly::constant(2, Rat(1)) - (y1.pow(2) * Rat(2) + y2.pow(2) * Rat(2)) * (1 / q) +
                    (y1.pow(2) - y2.pow(2)).pow(2) * (1 / (q * q));
        auto g = f * base.pow(s - 2);
        expect(o, integrate(g, P) == expected[s - 3], "s = " + std::to_string(s));
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        worst = std::max(worst, secs);
        expect(o, secs < 5, "s = " + std::to_string(s) + " over 5 s");
    }
    if (o.ok) {
        std::ostringstream os;
        os << "4 integrals exact, slowest " << worst << " s";
        o.detail = os.str();
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto x = MultiPoly::variable(1, 0);
    auto g = (x * Rat(2) + MultiPoly::constant(1, Rat(2))).pow(2);
    expect(o, integrate(x * g, box(1, -1, 1)) == rat(16, 3), "int x (2x+2)^2");
    expect(o, integrate(x * g, box(1, 0, 1)) - integrate(x * g, box(1, -1, 0)) == 6, "int |x| (2x+2)^2");
    if (o.ok) o.detail = "16/3 and 6";
    return o;
}

Outcome criterion5() {
    Outcome o;
    int t_cases = 0, m_cases = 0;
    for (int n = 2; n <= 12; ++n)
        for (int s = 1; s < n; ++s)
            for (int p = 1; p < n; ++p) {
                auto ct = normalize_case(Space::T, s, p, n);
                if (rank(ct.s, ct.p, ct.n) <= 2) {
                    bool want = n == 2 * s || n == 2 * p;
                    expect(o, ke_test_T(s, p, n).ke == want, "T" + triple(s, p, n));
                    ++t_cases;
                }
                auto cm = normalize_case(Space::M, s, p, n);
                if (rank(cm.s, cm.p, cm.n) <= 2) {
                    expect(o, ke_test_M(s, p, n).ke, "M" + triple(s, p, n));
                    ++m_cases;
                }
            }
    for (int p = 1; p <= 5; ++p, ++m_cases) expect(o, ke_test_M(p, p, 2 * p).ke, "M" + triple(p, p, 2 * p));
    if (o.ok) o.detail = std::to_string(t_cases) + " T cases, " + std::to_string(m_cases) + " M cases";
    return o;
}

Outcome criterion6() {
    Outcome o;
    int cases = 0, maps = 0;
    for_normalized(12, [&](int s, int p, int n) {
        ++cases;
        std::string at = triple(s, p, n);
        for (const auto& f : principal_divisors(s, p, n)) expect(o, f.divisor.is_zero(), "principal " + f.name + " " + at);
        expect(o, canonical_T(s, p, n) == canonical_T_Bform(s, p, n), "canonical_T " + at);
        for (Symmetry sym : {Symmetry::USD, Symmetry::DUAL, Symmetry::Usd, Symmetry::Dual}) {
            bool usd = sym == Symmetry::USD || sym == Symmetry::Usd;
            if (usd ? n != 2 * s : n != 2 * p) continue;
            auto m = pullback(sym, s, p, n);
            int d = m.matrix.rows();
            expect(o, m.matrix * m.matrix == RatMatrix::identity(d), to_string(sym) + " " + at);
            for (int i = 0; i < d; ++i) {
                std::vector<Rat> e(d, Rat(0));
                e[i] = 1;
                expect(o, m.apply(m.apply(e)) == e, to_string(sym) + " " + at);
            }
            ++maps;
        }
    });
    int mcases = 0;
    for (int n = 2; n <= 12; ++n)
        for (int p = 1; p < n; ++p)
            for (int s = p; s < n; ++s) {
                if (p == s && p != n - s) continue;
                expect(o, canonical_M(s, p, n) == canonical_M_Bform(s, p, n), "canonical_M " + triple(s, p, n));
                ++mcases;
            }
    if (o.ok) o.detail = std::to_string(cases) + " T cases, " + std::to_string(mcases) + " M cases, " + std::to_string(maps) + " involutions";
    return o;
}

Outcome criterion7() {
    Outcome o;
    long curves = 0;
    for_normalized(12, [&](int s, int p, int n) {
        std::string at = triple(s, p, n);
        auto K = canonical_T_full(s, p, n);
        for (const auto& id : enumerate_curves(s, p, n)) {
            ++curves;
            Rat a = -pair(K, curve_class(s, p, n, id));
            expect(o, a == Rat(closed_form_antik(s, p, n, id)), "-K " + id.to_string() + " " + at);
        }
        auto rep = nef_ample_T(s, p, n);
        expect(o, rep.nef, "nef " + at);
        expect(o, rep.ample == (rank(s, p, n) <= 2), "ample " + at);
        auto m = ample_M(s, p, n);
        expect(o, m.ample, "ample M " + at);
        expect(o, !m.min_degree || *m.min_degree >= 1, "M min degree " + at);
    });
    if (o.ok) o.detail = std::to_string(curves) + " curves";
    return o;
}

Outcome criterion8() {
    Outcome o;
    long checked = 0;
    std::mt19937_64 rng(2024);
    for (int n = 2; n <= 8; ++n)
        for (int p = 1; p < n; ++p)
            for (int s = p; s < n; ++s)
                for (int l = 0; l <= rank(s, p, n); ++l) {
                    auto c = canonical_chart(s, p, n, l);
                    for (int i = 0; i < 20; ++i) {
                        auto pt = random_point(c, rng);
                        auto r1 = verify_claim_I(c, pt);
                        auto r3 = verify_claim_III(c, pt);
                        expect(o, r1.ok() && r3.ok(), "chart l=" + std::to_string(l) + " " + triple(s, p, n));
                        checked += r1.checked + r3.checked;
                    }
                }
    if (o.ok) o.detail = std::to_string(checked) + " coordinates";
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        RatMatrix m(2, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1);
        auto v = plucker_vector(m);
        Rat rel = v.at({4, 3}) * v.at({2, 1}) - v.at({4, 2}) * v.at({3, 1}) + v.at({4, 1}) * v.at({3, 2});
        expect(o, rel == 0, "trial " + std::to_string(trial));
    }
    if (o.ok) o.detail = "100 matrices";
    return o;
}

Outcome criterion10() {
    Outcome o;
    for (int d = 1; d <= 5; ++d) expect(o, volume(standard_simplex(d)) == Rat(1) / Rat(factorial(d)), "simplex d=" + std::to_string(d));
    std::mt19937 gen(101);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + trial % 2;
        auto P = box(d, -1, 2);
        auto f = random_poly(d, gen);
        std::vector<Rat> a(d), na(d);
        for (auto& x : a) x = coef(gen);
        a[trial % d] += 4;
        for (int k = 0; k < d; ++k) na[k] = -a[k];
        HPolytope left = P, right = P;
        left.add(a, 0);
        right.add(na, 0);
        expect(o, integrate(f, left) + integrate(f, right) == integrate(f, P), "additivity " + std::to_string(trial));
    }
    std::uniform_int_distribution<int> small(-2, 2);
    int done = 0;
    while (done < 20) {
        int d = 1 + done % 3;
        RatMatrix A(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) A(i, j) = small(gen);
        Rat J = det(A);
        if (J == 0) continue;
        Point c(d);
        for (auto& x : c) x = small(gen);
        auto P = done % 2 ? standard_simplex(d) : box(d, 0, 1);
        auto f = random_poly(d, gen);
        expect(o, integrate(f, P.affine_image(A, c)) == abs(J) * integrate(f.affine_substitute(A, c), P),
               "change of variables " + std::to_string(done));
        ++done;
    }
    if (o.ok) o.detail = "5 simplices, 20 cuts, 20 affine maps";
    return o;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    struct Criterion {
        int id;
        const char* name;
        double limit;  // seconds, 0 for none
        Outcome (*run)();
    };
    const Criterion all[] = {
        {1, "M_{4,4,8} integrals", 60, criterion1},
        {2, "M_{5,5,10} integrals and decision", 900, criterion2},
        {3, "small planar integrals", 0, criterion3},
        {4, "interval integrals", 0, criterion4},
        {5, "KE decision conformance", 0, criterion5},
        {6, "divisor lattice identities", 0, criterion6},
        {7, "intersection cross-check", 0, criterion7},
        {8, "chart oracle", 0, criterion8},
        {9, "Plucker 3-term relation", 0, criterion9},
        {10, "polytope kernel properties", 0, criterion10},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.limit > 0 && secs >= c.limit) {
            o.ok = false;
            o.detail += " (over time limit)";
        }
        if (!o.ok) ++failed;
        std::printf("Criterion %d: %s  %s: %s [%.2f s]\n", c.id, o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
