#pragma once

#include "polyz/ints.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace polyz {

// Dense row-major matrix over Z.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix companion(const std::vector<Int>& monic_coeffs); // lowest degree first, leading 1 implied absent

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    std::vector<Int> apply(const std::vector<Int>& v) const;

    IntMatrix transposed() const;
    IntMatrix submatrix(const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

enum class Field { Q, Fp };

struct FieldSpec {
    Field kind = Field::Q;
    Int p; // prime when kind == Fp
    static FieldSpec rationals() { return {Field::Q, 0}; }
    static FieldSpec prime(Int q) { return {Field::Fp, std::move(q)}; }
};

// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& m);

// Rank over Q or F_p. Throws on non-prime modulus.
std::size_t rank_over(const IntMatrix& m, const FieldSpec& field);

// Characteristic polynomial of a square matrix (Faddeev-LeVerrier),
// coefficients lowest degree first, monic.
std::vector<Int> char_poly(const IntMatrix& a);

// All k x k minors in lexicographic (row-subset, col-subset) order.
std::vector<Int> minors(const IntMatrix& m, std::size_t k);

// Integer solution of M x = b, if one exists.
std::optional<std::vector<Int>> solve_linear_diophantine(const IntMatrix& m,
                                                         const std::vector<Int>& b);

} // namespace polyz
