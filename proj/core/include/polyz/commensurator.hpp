#pragma once

#include "polyz/matrix.hpp"

#include <optional>
#include <vector>

namespace polyz {

// Dense matrix over Q (entries reduced by mpq_class).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    static RatMatrix identity(std::size_t n);
    static RatMatrix from_int(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const RatMatrix&) const = default;

    RatMatrix operator*(const RatMatrix& rhs) const;
    std::vector<Rat> apply(const std::vector<Int>& v) const;

    Rat det() const;                    // Gaussian elimination, exact
    std::optional<RatMatrix> inverse() const;

    Int denominator_lcm() const;
    bool is_integral() const;
    std::optional<IntMatrix> to_int() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// charpoly(A) shares a factor with Phi_n for some n in {1, 2, 3, 4, 6}
// (the only n with phi(n) <= 3). Errors on matrices larger than 3x3.
bool has_root_of_unity_eigenvalue(const IntMatrix& a);

// Validated ambient action for the triple calculus: 3x3, |det| = 1,
// no root-of-unity eigenvalue.
struct AmbientAction {
    IntMatrix a;
    static AmbientAction validate(IntMatrix a);
};

IntMatrix int_matrix_pow(const IntMatrix& a, unsigned long k);

// Basis of { X rational 3x3 : X A^k = A^k X }.
std::vector<RatMatrix> centralizer_basis(const AmbientAction& a, unsigned long k);

// nu_l(A^k) = sum_{i<l} A^{ki}
IntMatrix nu(const AmbientAction& a, unsigned long k, unsigned long l);

struct CommTriple {
    RatMatrix b;
    std::vector<Int> w; // length 3
    unsigned long k = 1;
};

// Throws unless B is invertible and commutes with A^k.
void validate_triple(const AmbientAction& a, const CommTriple& t);

// (B, w, k) -> (B, nu_l(A^k) w, k l)
CommTriple triple_normalize(const AmbientAction& a, const CommTriple& t, unsigned long l);

bool triple_equiv(const AmbientAction& a, const CommTriple& t1, const CommTriple& t2);

// Lift to a common k (extending until B1 w2 is integral), then
// (B1 B2, w1 + B1 w2, k).
CommTriple triple_compose(const AmbientAction& a, const CommTriple& t1, const CommTriple& t2);

// Comm(Z^n) = GL(n, Q); a nonsingular B acts on the sublattice m Z^n with
// integral image, m = lcm of the denominators. Returns m, or nullopt if B
// is singular (not a commensuration).
std::optional<Int> comm_of_Zn_validate(const RatMatrix& b);

} // namespace polyz
