#include <doctest.h>

#include "artifact/errors.hpp"
#include "artifact/plucker.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace artifact;

namespace {

Rat small_rat(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 5) + 1;
    return rat(num, den);
}

RatMatrix random_matrix(int p, int n, std::mt19937_64& rng) {
    RatMatrix m(p, n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = small_rat(rng);
    return m;
}

// Leibniz expansion; independent of the Bareiss path.
Rat leibniz(const RatMatrix& m) {
    int n = m.rows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rat term = inv % 2 ? -1 : 1;
        for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Rat brute_minor(const RatMatrix& m, IndexTuple t) {
    std::sort(t.begin(), t.end());
    RatMatrix sub(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) sub(i, j) = m(i, t[j] - 1);
    return leibniz(sub);
}

}  // namespace

TEST_CASE("Bareiss determinant matches Leibniz") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + trial % 5;
        RatMatrix m = random_matrix(n, n, rng);
        CHECK(det(m) == leibniz(m));
    }
    RatMatrix sing = RatMatrix::from_rows({{rat(1), rat(2)}, {rat(2), rat(4)}});
    CHECK(det(sing) == 0);
    RatMatrix piv = RatMatrix::from_rows({{rat(0), rat(1), rat(2)}, {rat(0), rat(3), rat(1)}, {rat(5), rat(0), rat(0)}});
    CHECK(det(piv) == leibniz(piv));
}

TEST_CASE("identity minor") {
    RatMatrix m(2, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    auto v = plucker_vector(m);
    CHECK(v.coords.size() == 6);
    for (const auto& [t, x] : v.coords) CHECK(x == (t == IndexTuple{2, 1} ? 1 : 0));
}

TEST_CASE("p = 1 is coordinate projection") {
    RatMatrix m = RatMatrix::from_rows({{rat(3), rat(-1, 2), rat(0), rat(7, 3)}});
    auto v = plucker_vector(m);
    for (int i = 1; i <= 4; ++i) CHECK(v.at({i}) == m(0, i - 1));
}

TEST_CASE("three-term relation on 2x4 matrices") {
    // Oracle: explicit 2x2 determinants.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        RatMatrix m = random_matrix(2, 4, rng);
        auto d = [&](int a, int b) -> Rat { return m(0, a - 1) * m(1, b - 1) - m(0, b - 1) * m(1, a - 1); };
        CHECK(Rat(d(3, 4) * d(1, 2) - d(2, 4) * d(1, 3) + d(1, 4) * d(2, 3)) == 0);
        auto v = plucker_vector(m);
        CHECK(v.at({4, 3}) == d(3, 4));
        CHECK(Rat(v.at({4, 3}) * v.at({2, 1}) - v.at({4, 2}) * v.at({3, 1}) + v.at({4, 1}) * v.at({3, 2})) == 0);
    }
}

TEST_CASE("minors agree with brute force and strata partition the vector") {
    std::mt19937_64 rng(3);
    RatMatrix m = random_matrix(2, 5, rng);
    auto v = plucker_vector(m);
    auto st = project_stratum(v, 3, 1);
    CHECK(st.size() == 6);
    for (const auto& [t, x] : st) CHECK(x == brute_minor(m, t));
    for (int trial = 0; trial < 10; ++trial) {
        RatMatrix a = random_matrix(3, 6, rng);
        auto va = plucker_vector(a);
        std::size_t total = 0;
        for (int k = 0; k <= 3; ++k) {
            auto sk = project_stratum(va, 2, k);
            total += sk.size();
            for (const auto& [t, x] : sk) CHECK(x == brute_minor(a, t));
        }
        CHECK(total == va.coords.size());
    }
}

TEST_CASE("project_stratum examples") {
    RatMatrix m = RatMatrix::from_rows({{rat(5), rat(6), rat(7)}});
    auto s0 = project_stratum(plucker_vector(m), 2, 0);
    CHECK(s0 == Coords{{{1}, rat(5)}, {{2}, rat(6)}});
    RatMatrix low(2, 5);
    low(0, 0) = 1, low(0, 2) = 3, low(1, 1) = 2, low(1, 2) = -1;
    auto top = project_stratum(plucker_vector(low), 3, 2);
    for (const auto& kv : top) CHECK(kv.second == 0);
    CHECK_THROWS_AS(project_stratum(plucker_vector(low), 3, 3), ParamError);
}

TEST_CASE("left GL(p) action rescales all coordinates") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix m = random_matrix(3, 6, rng);
        RatMatrix g = random_matrix(3, 3, rng);
        Rat dg = det(g);
        if (dg == 0) continue;
        auto a = plucker_vector(m), b = plucker_vector(g * m);
        for (const auto& [t, x] : a.coords) CHECK(b.at(t) == dg * x);
    }
}

TEST_CASE("blowup_map") {
    RatMatrix ab = RatMatrix::from_rows({{rat(2), rat(-3)}});
    auto pt = blowup_map(ab, 1);
    CHECK(pt.full == Coords{{{1}, rat(1)}, {{2}, rat(-3, 2)}});
    CHECK(pt.strata.size() == 2);
    CHECK(pt.strata[0] == Coords{{{1}, rat(1)}});
    CHECK(pt.strata[1] == Coords{{{2}, rat(1)}});

    RatMatrix m = RatMatrix::from_rows({{rat(1), rat(2), rat(3), rat(4)}});
    auto q = blowup_map(m, 2);
    CHECK(q.full == Coords{{{1}, rat(1)}, {{2}, rat(2)}, {{3}, rat(3)}, {{4}, rat(4)}});
    CHECK(q.strata[0] == Coords{{{1}, rat(1)}, {{2}, rat(2)}});
    CHECK(proportional(q.strata[1], Coords{{{3}, rat(3)}, {{4}, rat(4)}}));

    std::mt19937_64 rng(9);
    auto g = blowup_map(random_matrix(2, 5, rng), 3);
    for (const auto& st : g.strata) CHECK(std::any_of(st.begin(), st.end(), [](auto& kv) { return kv.second != 0; }));

    RatMatrix bad = RatMatrix::from_rows({{rat(1), rat(0), rat(0)}});
    CHECK_THROWS_AS(blowup_map(bad, 1), ParamError);
}

TEST_CASE("matrix text format") {
    RatMatrix m = read_matrix("2 3\n1 -1/2 0\n3/4 2 5\n");
    CHECK(m.rows() == 2);
    CHECK(m(0, 1) == rat(-1, 2));
    CHECK(m(1, 0) == rat(3, 4));
    CHECK_THROWS_AS(read_matrix("2 3\n1 2 3\n4 5"), ParamError);
    CHECK_THROWS_AS(read_matrix("1 2\n1 2/0"), ParamError);
    CHECK_THROWS_AS(read_matrix("1 2\n1 x"), ParamError);
    CHECK(to_string(rat(6, -4)) == "-3/2");
    CHECK(to_string(rat(5)) == "5/1");
}
