#include "artifact/poly.hpp"

#include "artifact/errors.hpp"

#include <sstream>

namespace artifact {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw ParamError("negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly f(nvars);
    f.add_term(Exponent(nvars, 0), c);
    return f;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw ParamError("variable index out of range");
    MultiPoly f(nvars);
    Exponent e(nvars, 0);
    e[i] = 1;
    f.add_term(e, Rat(1));
    return f;
}

MultiPoly MultiPoly::linear(const std::vector<Rat>& a, const Rat& c) {
    int d = static_cast<int>(a.size());
    MultiPoly f = constant(d, c);
    for (int i = 0; i < d; ++i) {
        Exponent e(d, 0);
        e[i] = 1;
        f.add_term(e, a[i]);
    }
    return f;
}

int MultiPoly::degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        deg = std::max(deg, t);
    }
    return deg;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_) throw ParamError("exponent length does not match the variable count");
    for (int x : e)
        if (x < 0) throw ParamError("negative exponent");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void MultiPoly::check_dim(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw ParamError("polynomials have different variable counts");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    out += o;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + o * Rat(-1); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_dim(o);
    MultiPoly out(nvars_);
    Exponent e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(nvars_, Rat(1));
    MultiPoly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw ParamError("point has the wrong dimension");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::affine_substitute(const RatMatrix& A, const std::vector<Rat>& c) const {
    if (A.rows() != nvars_ || static_cast<int>(c.size()) != nvars_)
        throw ParamError("substitution has the wrong shape");
    int m = A.cols();
    // Powers of each substituted variable, built on demand.
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) powers[i].push_back(constant(m, Rat(1)));
    auto power = [&](int i, int k) -> const MultiPoly& {
        while (static_cast<int>(powers[i].size()) <= k) {
            MultiPoly li = linear(A.row(i), c[i]);
            powers[i].push_back(powers[i].back() * li);
        }
        return powers[i][k];
    };
    MultiPoly out(m);
    for (const auto& [e, coef] : terms_) {
        MultiPoly t = constant(m, coef);
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) t = t * power(i, e[i]);
        out += t;
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << artifact::to_string(c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) os << "*x" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
        first = false;
    }
    return os.str();
}

MultiPoly read_poly(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int nvars = -1;
    std::vector<std::pair<Exponent, Rat>> terms;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag != "term:") throw ParamError("line " + std::to_string(lineno) + ": expected 'term:'");
        std::string tok;
        if (!(ls >> tok)) throw ParamError("line " + std::to_string(lineno) + ": missing coefficient");
        Rat c = parse_rat(tok);
        Exponent e;
        while (ls >> tok) {
            std::size_t used = 0;
            int x = 0;
            try {
                x = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || x < 0)
                throw ParamError("line " + std::to_string(lineno) + ": bad exponent '" + tok + "'");
            e.push_back(x);
        }
        if (nvars < 0) nvars = static_cast<int>(e.size());
        if (static_cast<int>(e.size()) != nvars)
            throw ParamError("line " + std::to_string(lineno) + ": exponent count differs from earlier terms");
        terms.emplace_back(e, c);
    }
    if (nvars < 0) throw ParamError("polynomial file has no terms");
    MultiPoly f(nvars);
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

std::string write_poly(const MultiPoly& f) {
    std::ostringstream os;
    for (const auto& [e, c] : f.terms()) {
        os << "term: " << to_string(c);
        for (int x : e) os << " " << x;
        os << "\n";
    }
    return os.str();
}

}  // namespace artifact
