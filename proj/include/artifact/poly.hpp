#pragma once

#include "artifact/matrix.hpp"
#include "artifact/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace artifact {

using Exponent = std::vector<int>;

/** Sparse polynomial in nvars variables; zero coefficients are never stored. */
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0);
    static MultiPoly constant(int nvars, const Rat& c);
    /** x_i, 0-based. */
    static MultiPoly variable(int nvars, int i);
    /** a . x + c */
    static MultiPoly linear(const std::vector<Rat>& a, const Rat& c);

    int nvars() const { return nvars_; }
    const std::map<Exponent, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    void add_term(const Exponent& e, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    MultiPoly pow(unsigned k) const;
    Rat evaluate(const std::vector<Rat>& x) const;

    /** Substitutes x = A v + c, where A is nvars x m; the result lives in m variables. */
    MultiPoly affine_substitute(const RatMatrix& A, const std::vector<Rat>& c) const;

    std::string to_string() const;

private:
    void check_dim(const MultiPoly& o) const;
    int nvars_;
    std::map<Exponent, Rat> terms_;
};

/** Lines "term: coeff e1 ... ed"; blank lines and '#' comments are ignored. */
MultiPoly read_poly(const std::string& text);
std::string write_poly(const MultiPoly& f);

}  // namespace artifact
