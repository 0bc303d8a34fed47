#include "artifact/picard.hpp"

#include "artifact/errors.hpp"
#include "artifact/index.hpp"

#include <sstream>

namespace artifact {

namespace {

// Full-vector layout. T: [H, D+_1..r, D-_1..r]; M: [H, Dc_1..r].
int full_size(const PicBasis& b) { return b.space == Space::T ? 2 * b.r + 1 : b.r + 1; }
int idx_plus(const PicBasis&, int i) { return i; }
int idx_minus(const PicBasis& b, int i) { return b.r + i; }
int idx_check(const PicBasis&, int i) { return i; }

std::vector<int> kept_indices(const PicBasis& b) {
    std::vector<int> kept;
    int r = b.r;
    bool pns = b.variant != PicVariant::Generic;
    bool pss = b.variant == PicVariant::PEqualsSEqualsNMinusS;
    if (b.space == Space::T) {
        kept.push_back(0);
        for (int i = 1; i <= r; ++i)
            if (!(pss && i == r)) kept.push_back(idx_plus(b, i));
        for (int i = 1; i <= r; ++i)
            if (!(pns && i == r)) kept.push_back(idx_minus(b, i));
    } else {
        if (!pss) kept.push_back(0);
        for (int i = 1; i <= r; ++i)
            if (!(pns && i == r)) kept.push_back(idx_check(b, i));
    }
    return kept;
}

std::vector<std::string> full_names(const PicBasis& b) {
    std::vector<std::string> names{"H"};
    if (b.space == Space::T) {
        for (int i = 1; i <= b.r; ++i) names.push_back("D+_" + std::to_string(i));
        for (int i = 1; i <= b.r; ++i) names.push_back("D-_" + std::to_string(i));
    } else {
        for (int i = 1; i <= b.r; ++i) names.push_back("Dc_" + std::to_string(i));
    }
    return names;
}

PicVariant variant_of(int s, int p, int n) {
    if (p == n - s && p == s) return PicVariant::PEqualsSEqualsNMinusS;
    if (p == n - s) return PicVariant::PEqualsNMinusS;
    return PicVariant::Generic;
}

void check_same(const PicBasis& a, const PicBasis& b) {
    if (!(a == b)) throw ParamError("divisor classes live on different Picard bases");
}

FullVector add(std::initializer_list<std::pair<long, FullVector>> terms) {
    FullVector out;
    for (const auto& [c, v] : terms) {
        if (out.empty()) out.assign(v.size(), Rat(0));
        for (std::size_t i = 0; i < v.size(); ++i) out[i] += c * v[i];
    }
    return out;
}

void axpy(FullVector& y, const Rat& c, const FullVector& x) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

FullVector sum_D_plus(const PicBasis& b, int m) {
    FullVector v = full_zero(b);
    for (int i = 1; i <= m; ++i) v[idx_plus(b, i)] += 1;
    return v;
}

FullVector sum_D_minus(const PicBasis& b, int m) {
    FullVector v = full_zero(b);
    for (int i = 1; i <= m; ++i) v[idx_minus(b, i)] += 1;
    return v;
}

FullVector sum_D_check(const PicBasis& b, int from, int to) {
    FullVector v = full_zero(b);
    for (int i = from; i <= to; ++i) v[idx_check(b, i)] += 1;
    return v;
}

FullVector B_full(const PicBasis& b, int j) {
    int r = b.r;
    if (j < 0 || j > r) throw ParamError("B_j needs 0 <= j <= r = " + std::to_string(r));
    if (j == 0 && b.p == b.s) return full_D_plus(b, r);
    if (j == r && b.p == b.n - b.s) return full_D_minus(b, r);
    FullVector v = full_H(b);
    for (int i = 1; i <= r - j; ++i) v[idx_plus(b, i)] -= r - j + 1 - i;
    for (int i = 1; i <= j; ++i) v[idx_minus(b, i)] -= j + 1 - i;
    return v;
}

FullVector Bcheck_full(const PicBasis& b, int i) {
    int r = b.r;
    if (i < 0 || i > r) throw ParamError("Bc_i needs 0 <= i <= r = " + std::to_string(r));
    if (i == r && b.p == b.n - b.s) return full_D_check(b, r);
    FullVector v = full_H(b);
    if (i >= 1) v[idx_check(b, 1)] -= i;
    for (int k = 2; k <= i; ++k) v[idx_check(b, k)] -= i + 1 - k;
    return v;
}

FullVector kan_T_full(const PicBasis& b) {
    int s = b.s, p = b.p, n = b.n, r = b.r;
    FullVector v = full_zero(b);
    v[0] = -n;
    for (int i = 1; i <= r; ++i) {
        v[idx_minus(b, i)] = (p - i + 1) * (n - s - i + 1) - 1;
        v[idx_plus(b, i)] = r == p ? (p - i + 1) * (s - i + 1) - 1 : (n - p - i + 1) * (n - s - i + 1) - 1;
    }
    return v;
}

FullVector kan_M_full(const PicBasis& b) {
    int s = b.s, p = b.p, n = b.n, r = b.r;
    FullVector v = full_zero(b);
    v[0] = -n;
    if (r >= 1) v[idx_check(b, 1)] = p * (n - s);
    for (int i = 2; i <= r; ++i) v[idx_check(b, i)] = (p - i + 1) * (n - s - i + 1) - 1;
    return v;
}

void require_M(int s, int p, int n) {
    validate(GrassParams{s, p, n});
    if (p > s) throw ParamError("M_{s,p,n} needs p <= s; apply Dual/Usd first");
    if (p == s && p != n - s) throw ParamError("M_{s,p,n} with p = s needs n = 2s");
}

Coweight gamma_combo(int dim, int offset, std::initializer_list<std::pair<int, int>> terms) {
    Coweight w(dim, Int(0));
    for (const auto& [idx, c] : terms) {
        int pos = idx - offset;
        if (pos >= 0 && pos < dim) w[pos] += c;
    }
    return w;
}

}  // namespace

std::string to_string(Space sp) { return sp == Space::T ? "T" : "M"; }

std::string to_string(PicVariant v) {
    switch (v) {
        case PicVariant::Generic: return "generic";
        case PicVariant::PEqualsNMinusS: return "p=n-s<s";
        case PicVariant::PEqualsSEqualsNMinusS: return "p=s=n-s";
    }
    return "";
}

bool PicBasis::operator==(const PicBasis& o) const {
    return space == o.space && variant == o.variant && s == o.s && p == o.p && n == o.n;
}

void require_normalized(int s, int p, int n) {
    validate(GrassParams{s, p, n});
    if (!(2 * p <= n && n <= 2 * s)) {
        std::ostringstream os;
        os << "parameters (s,p,n) = (" << s << "," << p << "," << n << ") are not normalized: need 2p <= n <= 2s";
        if (2 * p > n) os << "; DUAL maps to (" << s << "," << n - p << "," << n << ")";
        if (n > 2 * s) os << "; USD maps to (" << n - s << "," << p << "," << n << ")";
        throw ParamError(os.str());
    }
}

PicBasis pic_basis(Space sp, int s, int p, int n) {
    if (sp == Space::T)
        require_normalized(s, p, n);
    else
        require_M(s, p, n);
    PicBasis b;
    b.space = sp;
    b.variant = variant_of(s, p, n);
    b.s = s, b.p = p, b.n = n, b.r = rank(s, p, n);
    auto all = full_names(b);
    for (int k : kept_indices(b)) b.names.push_back(all[k]);
    return b;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    check_same(basis, o.basis);
    DivisorClass out = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += o.coeffs[i];
    return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    check_same(basis, o.basis);
    DivisorClass out = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] -= o.coeffs[i];
    return out;
}

DivisorClass DivisorClass::operator*(const Int& c) const {
    DivisorClass out = *this;
    for (auto& x : out.coeffs) x *= c;
    return out;
}

bool DivisorClass::operator==(const DivisorClass& o) const { return basis == o.basis && coeffs == o.coeffs; }

bool DivisorClass::is_zero() const {
    for (const auto& x : coeffs)
        if (x != 0) return false;
    return true;
}

Int DivisorClass::coeff(const std::string& name) const {
    for (std::size_t i = 0; i < basis.names.size(); ++i)
        if (basis.names[i] == name) return coeffs[i];
    return 0;
}

std::string DivisorClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << (coeffs[i] < 0 ? " - " : " + ");
        else if (coeffs[i] < 0) os << "-";
        Int a = abs(coeffs[i]);
        if (a != 1) os << a.get_str() << "*";
        os << basis.names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

DivisorClass zero_class(const PicBasis& b) { return DivisorClass{b, std::vector<Int>(b.names.size(), Int(0))}; }

FullVector full_zero(const PicBasis& b) { return FullVector(full_size(b), Rat(0)); }

FullVector full_H(const PicBasis& b) {
    FullVector v = full_zero(b);
    v[0] = 1;
    return v;
}

FullVector full_D_plus(const PicBasis& b, int i) {
    if (b.space != Space::T || i < 1 || i > b.r) throw ParamError("D+_i needs T and 1 <= i <= r");
    FullVector v = full_zero(b);
    v[idx_plus(b, i)] = 1;
    return v;
}

FullVector full_D_minus(const PicBasis& b, int i) {
    if (b.space != Space::T || i < 1 || i > b.r) throw ParamError("D-_i needs T and 1 <= i <= r");
    FullVector v = full_zero(b);
    v[idx_minus(b, i)] = 1;
    return v;
}

FullVector full_D_check(const PicBasis& b, int i) {
    if (b.space != Space::M || i < 1 || i > b.r) throw ParamError("Dc_i needs M and 1 <= i <= r");
    FullVector v = full_zero(b);
    v[idx_check(b, i)] = 1;
    return v;
}

std::vector<Rat> reduce_full(const PicBasis& b, const FullVector& in) {
    if (static_cast<int>(in.size()) != full_size(b)) throw ParamError("full vector has the wrong length");
    FullVector v = in;
    int r = b.r;
    bool pns = b.variant != PicVariant::Generic;
    bool pss = b.variant == PicVariant::PEqualsSEqualsNMinusS;
    if (b.space == Space::T) {
        // D-_r = H - sum_{i<r} (r+1-i) D-_i, and the same for D+_r when p = s.
        auto drop = [&](int (*idx)(const PicBasis&, int)) {
            Rat c = v[idx(b, r)];
            v[idx(b, r)] = 0;
            v[0] += c;
            for (int i = 1; i < r; ++i) v[idx(b, i)] -= c * (r + 1 - i);
        };
        if (pns) drop(idx_minus);
        if (pss) drop(idx_plus);
    } else {
        // Dc_r = H - sum_{k<r} (r+1-k) Dc_k; H is trivial when p = s = n-s.
        if (pns) {
            Rat c = v[idx_check(b, r)];
            v[idx_check(b, r)] = 0;
            v[0] += c;
            for (int k = 1; k < r; ++k) v[idx_check(b, k)] -= c * (r + 1 - k);
        }
        if (pss) v[0] = 0;
    }
    std::vector<Rat> out;
    for (int k : kept_indices(b)) out.push_back(v[k]);
    return out;
}

DivisorClass from_full(const PicBasis& b, const FullVector& v) {
    auto red = reduce_full(b, v);
    DivisorClass d = zero_class(b);
    for (std::size_t i = 0; i < red.size(); ++i) {
        if (red[i].get_den() != 1) throw CrossCheckError("non-integral divisor class coefficient " + to_string(red[i]));
        d.coeffs[i] = red[i].get_num();
    }
    return d;
}

DivisorClass divisor_B(int s, int p, int n, int j) {
    auto b = pic_basis(Space::T, s, p, n);
    return from_full(b, B_full(b, j));
}

FullVector canonical_T_full(int s, int p, int n) { return kan_T_full(pic_basis(Space::T, s, p, n)); }

DivisorClass canonical_T(int s, int p, int n) {
    auto b = pic_basis(Space::T, s, p, n);
    return from_full(b, kan_T_full(b));
}

std::vector<Int> bform_coefficients_T(int s, int p, int n) {
    require_normalized(s, p, n);
    int r = rank(s, p, n);
    std::vector<Int> c(r + 1, Int(2));
    if (p < n - s) {
        c[0] = s - p + 1;
        c[p] = n - s - p + 1;
    } else if (p == n - s && p < s) {
        c[0] = s - p + 1;
        c[p] = 0;
    } else if (n - s < p && p < s) {
        c[0] = s - p + 1;
        c[r] = p - r + 1;
    } else {
        c[0] = 0;
        c[p] = 0;
    }
    return c;
}

DivisorClass canonical_T_Bform(int s, int p, int n) {
    auto b = pic_basis(Space::T, s, p, n);
    auto c = bform_coefficients_T(s, p, n);
    FullVector v = full_zero(b);
    for (int j = 0; j <= b.r; ++j)
        if (c[j] != 0) axpy(v, Rat(-c[j]), B_full(b, j));
    axpy(v, Rat(-1), sum_D_minus(b, b.r));
    axpy(v, Rat(-1), sum_D_plus(b, b.r));
    return from_full(b, v);
}

DivisorClass divisor_Bcheck(int s, int p, int n, int i) {
    auto b = pic_basis(Space::M, s, p, n);
    return from_full(b, Bcheck_full(b, i));
}

DivisorClass canonical_M(int s, int p, int n) {
    auto b = pic_basis(Space::M, s, p, n);
    return from_full(b, kan_M_full(b));
}

std::vector<Int> bform_coefficients_M(int s, int p, int n) {
    require_M(s, p, n);
    int r = rank(s, p, n);
    std::vector<Int> c(r + 1, Int(2));
    if (p < n - s && p < s) {
        c[0] = s - p + 1;
        c[p] = n - s - p + 1;
    } else if (p == n - s && p < s) {
        c[0] = s - p + 1;
        c[p] = 0;
    } else if (n - s < p && p < s) {
        c[0] = s - p + 1;
        c[r] = p - r + 1;
    } else {
        c[0] = 0;
        c[p] = 0;
    }
    return c;
}

DivisorClass canonical_M_Bform(int s, int p, int n) {
    auto b = pic_basis(Space::M, s, p, n);
    auto c = bform_coefficients_M(s, p, n);
    FullVector v = full_zero(b);
    for (int j = 0; j <= b.r; ++j)
        if (c[j] != 0) axpy(v, Rat(-c[j]), Bcheck_full(b, j));
    axpy(v, Rat(-1), sum_D_check(b, 2, b.r));
    return from_full(b, v);
}

std::vector<NamedDivisor> principal_divisors(int s, int p, int n) {
    auto b = pic_basis(Space::T, s, p, n);
    int r = b.r;
    auto B = [&](int j) { return B_full(b, j); };
    auto Dm = [&](int i) { return full_D_minus(b, i); };
    auto Dp = [&](int i) { return full_D_plus(b, i); };
    auto gen = [&](int k) { return add({{1, B(k)}, {-2, B(k - 1)}, {1, B(k - 2)}, {1, Dm(k)}, {1, Dp(r + 2 - k)}}); };
    auto last = [&]() { return add({{1, B(r)}, {-2, B(r - 1)}, {1, B(r - 2)}, {1, Dp(2)}}); };
    std::vector<FullVector> fs;
    if (p != n - s) {
        fs.push_back(add({{1, B(1)}, {-1, B(0)}, {1, Dm(1)}, {-1, sum_D_plus(b, r)}}));
        for (int k = 2; k <= r; ++k) fs.push_back(gen(k));
    } else if (p < s) {
        if (p == 1) {
            fs.push_back(add({{1, B(1)}, {-1, B(0)}, {-1, Dp(1)}}));
        } else {
            fs.push_back(add({{1, B(1)}, {-1, B(0)}, {1, Dm(1)}, {-1, sum_D_plus(b, r)}}));
            for (int k = 2; k < r; ++k) fs.push_back(gen(k));
            fs.push_back(last());
        }
    } else if (p == 1) {
        fs.push_back(add({{1, B(1)}, {-1, B(0)}}));
    } else if (p == 2) {
        fs.push_back(add({{1, B(1)}, {-1, B(0)}, {1, Dm(1)}, {-1, Dp(1)}}));
        fs.push_back(add({{1, B(2)}, {-2, B(1)}, {1, B(0)}}));
    } else {
        fs.push_back(add({{1, B(1)}, {-1, B(0)}, {1, Dm(1)}, {-1, sum_D_plus(b, r - 1)}}));
        fs.push_back(add({{1, B(2)}, {-2, B(1)}, {1, B(0)}, {1, Dm(2)}}));
        for (int k = 3; k < r; ++k) fs.push_back(gen(k));
        fs.push_back(last());
    }
    std::vector<NamedDivisor> out;
    for (std::size_t k = 0; k < fs.size(); ++k) out.push_back({"f" + std::to_string(k + 1), from_full(b, fs[k]), fs[k]});
    return out;
}

std::vector<FullVector> basis_relations(const PicBasis& b) {
    std::vector<FullVector> out;
    int r = b.r;
    bool pns = b.variant != PicVariant::Generic;
    bool pss = b.variant == PicVariant::PEqualsSEqualsNMinusS;
    auto relation = [&](FullVector dropped, auto gen) {
        axpy(dropped, Rat(-1), full_H(b));
        for (int i = 1; i < r; ++i) axpy(dropped, Rat(r + 1 - i), gen(i));
        out.push_back(dropped);
    };
    if (b.space == Space::T) {
        if (pns) relation(full_D_minus(b, r), [&](int i) { return full_D_minus(b, i); });
        if (pss) relation(full_D_plus(b, r), [&](int i) { return full_D_plus(b, i); });
    } else {
        if (pns) relation(full_D_check(b, r), [&](int i) { return full_D_check(b, i); });
        if (pss) out.push_back(full_H(b));
    }
    return out;
}

std::string to_string(Symmetry sym) {
    switch (sym) {
        case Symmetry::USD: return "USD";
        case Symmetry::DUAL: return "DUAL";
        case Symmetry::Usd: return "Usd";
        case Symmetry::Dual: return "Dual";
    }
    return "";
}

Symmetry parse_symmetry(const std::string& text) {
    for (Symmetry s : {Symmetry::USD, Symmetry::DUAL, Symmetry::Usd, Symmetry::Dual})
        if (to_string(s) == text) return s;
    throw ParamError("unknown symmetry '" + text + "'");
}

std::vector<Rat> LatticeMap::apply(const std::vector<Rat>& coords) const {
    if (static_cast<int>(coords.size()) != matrix.cols()) throw ParamError("coordinate vector has the wrong length");
    std::vector<Rat> out(matrix.rows(), Rat(0));
    for (int i = 0; i < matrix.rows(); ++i)
        for (int j = 0; j < matrix.cols(); ++j) out[i] += matrix(i, j) * coords[j];
    return out;
}

DivisorClass LatticeMap::apply(const DivisorClass& d) const {
    check_same(basis, d.basis);
    std::vector<Rat> in(d.coeffs.begin(), d.coeffs.end());
    auto out = apply(in);
    DivisorClass res = zero_class(basis);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].get_den() != 1) throw CrossCheckError("pullback leaves the integral lattice");
        res.coeffs[i] = out[i].get_num();
    }
    return res;
}

LatticeMap pullback(Symmetry sym, int s, int p, int n) {
    bool usd = sym == Symmetry::USD || sym == Symmetry::Usd;
    Space sp = (sym == Symmetry::USD || sym == Symmetry::DUAL) ? Space::T : Space::M;
    if (usd && n != 2 * s) throw ParamError(to_string(sym) + " is a self-map only when n = 2s");
    if (!usd && n != 2 * p) throw ParamError(to_string(sym) + " is a self-map only when n = 2p");
    require_normalized(s, p, n);
    auto b = pic_basis(sp, s, p, n);
    int r = b.r;
    bool pss = b.variant == PicVariant::PEqualsSEqualsNMinusS;
    // Image of each full generator.
    std::vector<FullVector> image(full_size(b), full_zero(b));
    if (sp == Space::T) {
        image[0] = full_H(b);
        for (int i = 1; i <= r; ++i) {
            image[idx_plus(b, i)] = full_D_minus(b, i);
            image[idx_minus(b, i)] = full_D_plus(b, i);
        }
    } else {
        for (int i = 2; i <= r; ++i) image[idx_check(b, i)] = full_D_check(b, r + 2 - i);
        if (r >= 1) {
            FullVector d1 = full_zero(b);
            if (pss) {
                for (int i = 2; i <= r; ++i) d1[idx_check(b, i)] = rat(-(i - 1), r);
            } else {
                for (int i = 1; i <= r; ++i) d1[idx_check(b, i)] = -1;
            }
            image[idx_check(b, 1)] = d1;
        }
        FullVector h = full_H(b);
        for (int i = 1; i <= r; ++i) h[idx_check(b, i)] -= r + 1 - i;
        image[0] = pss ? full_zero(b) : h;
    }
    auto kept = kept_indices(b);
    int dim = static_cast<int>(kept.size());
    LatticeMap m{sym, b, RatMatrix(dim, dim), true};
    for (int j = 0; j < dim; ++j) {
        auto col = reduce_full(b, image[kept[j]]);
        for (int i = 0; i < dim; ++i) {
            m.matrix(i, j) = col[i];
            if (col[i].get_den() != 1) m.integral = false;
        }
    }
    return m;
}

WeightData weight_data(int s, int p, int n) {
    require_normalized(s, p, n);
    WeightData w;
    int r = w.r = rank(s, p, n);
    for (int i = 1; i <= r; ++i) w.chi.push_back("chi_" + std::to_string(i));
    if (r == 1) {
        w.rho_B = {{Int(-1)}, {Int(1)}};
    } else {
        w.rho_B.push_back(gamma_combo(r, 1, {{1, -1}, {2, 1}}));
        for (int j = 1; j <= r; ++j) w.rho_B.push_back(gamma_combo(r, 1, {{j, 1}, {j + 1, -2}, {j + 2, 1}}));
    }
    for (int i = 1; i <= r; ++i) {
        w.v_D_plus.push_back(i == 1 ? gamma_combo(r, 1, {{1, -1}}) : gamma_combo(r, 1, {{1, -1}, {r + 2 - i, 1}}));
        w.v_D_minus.push_back(gamma_combo(r, 1, {{i, 1}}));
    }
    int dm = r - 1;
    for (int i = 2; i <= r; ++i) w.v_D_check.push_back(gamma_combo(dm, 2, {{i, 1}}));
    w.has_Bcheck0 = p < s;
    for (int j = 0; j <= r; ++j) w.rho_Bcheck.push_back(gamma_combo(dm, 2, {{j, 1}, {j + 1, -2}, {j + 2, 1}}));
    return w;
}

}  // namespace artifact
