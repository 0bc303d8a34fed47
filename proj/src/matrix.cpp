#include "artifact/matrix.hpp"

#include "artifact/errors.hpp"

#include <sstream>
#include <utility>

namespace artifact {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ParamError("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, Rat(0));
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw ParamError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rat> RatMatrix::row(int i) const {
    return {data_.begin() + static_cast<long>(i) * cols_, data_.begin() + static_cast<long>(i + 1) * cols_};
}

RatMatrix RatMatrix::select_columns(const std::vector<int>& cols) const {
    RatMatrix out(rows_, static_cast<int>(cols.size()));
    for (int i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, static_cast<int>(j)) = (*this)(i, cols[j]);
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw ParamError("matrix product dimension mismatch");
    RatMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
        }
    return out;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Int bareiss_det(std::vector<Int>& a, int n) {
    auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * n + j]; };
    int sgn_ = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sgn_ = -sgn_;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = at(k, k);
    }
    if (n == 0) return 1;
    return sgn_ * at(n - 1, n - 1);
}

Rat det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw ParamError("determinant of non-square matrix");
    int n = m.rows();
    std::vector<Int> a(static_cast<std::size_t>(n) * n);
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        Int l = lcm_of_denominators(m.row(i));
        scale *= l;
        for (int j = 0; j < n; ++j) {
            Rat v = m(i, j) * l;
            a[static_cast<std::size_t>(i) * n + j] = v.get_num();
        }
    }
    Rat d(bareiss_det(a, n), scale);
    d.canonicalize();
    return d;
}

int rank(const RatMatrix& m) {
    RatMatrix a = m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        for (int i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& a_in, const std::vector<Rat>& b_in) {
    int n = a_in.rows();
    if (a_in.cols() != n || static_cast<int>(b_in.size()) != n) throw ParamError("solve: shape mismatch");
    RatMatrix a = a_in;
    std::vector<Rat> b = b_in;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a(i, c) != 0) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
            std::swap(b[c], b[piv]);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c) / a(c, c);
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            b[i] -= f * b[c];
        }
    }
    for (int i = 0; i < n; ++i) b[i] /= a(i, i);
    return b;
}

RatMatrix read_matrix(const std::string& text) {
    std::istringstream in(text);
    int p = 0, n = 0;
    if (!(in >> p >> n) || p <= 0 || n <= 0) throw ParamError("matrix header must be 'p n' with positive entries");
    RatMatrix m(p, n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParamError("matrix file ends early");
            m(i, j) = parse_rat(tok);
        }
    std::string extra;
    if (in >> extra) throw ParamError("trailing data in matrix file");
    return m;
}

}  // namespace artifact
