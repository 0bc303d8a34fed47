#pragma once

#include "artifact/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace artifact {

/** Dense row-major rational matrix. */
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<Rat> row(int i) const;
    /** Columns given by 0-based indices, in the order listed. */
    RatMatrix select_columns(const std::vector<int>& cols) const;

    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

/** Fraction-free Bareiss determinant of a square integer matrix (row-major, destroyed). */
Int bareiss_det(std::vector<Int>& a, int n);

/** Determinant: rows scaled to integers, then Bareiss. */
Rat det(const RatMatrix& m);

int rank(const RatMatrix& m);

/** Unique solution of a square system, or nullopt when singular. */
std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b);

/** Text format: "p n" then p rows of n rationals. */
RatMatrix read_matrix(const std::string& text);

}  // namespace artifact
