#include "polyz/matrix.hpp"
#include "polyz/smith.hpp"

#include <algorithm>

namespace polyz {

std::vector<Int> prime_factors(Int n) {
    n = abs(n);
    if (n == 0) throw error("prime_factors: zero");
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw error("IntMatrix: ragged initializer");
        for (const auto& x : r) e_.push_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::companion(const std::vector<Int>& coeffs) {
    // coeffs = c0..c_{n-1} of monic t^n + c_{n-1} t^{n-1} + ... + c0
    const std::size_t n = coeffs.size();
    if (n == 0) throw error("companion: empty");
    IntMatrix m(n, n);
    for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -coeffs[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw error("matrix product: shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw error("matrix sum: shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw error("matrix diff: shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw error("matrix apply: shape mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) const {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}
void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}
void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}
void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}
void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}
void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

Int determinant(const IntMatrix& m) {
    if (!m.square()) throw error("determinant: non-square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

std::size_t rank_mod_p(IntMatrix a, const Int& p) {
    const std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = mod_pos(a.at(i, j), p);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        a.swap_rows(rank, piv);
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), a.at(rank, col).get_mpz_t(), p.get_mpz_t()))
            throw error("rank_over: modulus not prime");
        for (std::size_t j = col; j < cols; ++j)
            a.at(rank, j) = mod_pos(a.at(rank, j) * inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a.at(i, col) == 0) continue;
            Int c = a.at(i, col);
            for (std::size_t j = col; j < cols; ++j)
                a.at(i, j) = mod_pos(a.at(i, j) - c * a.at(rank, j), p);
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_over_q(IntMatrix a) {
    // fraction-free row echelon; row swaps and cross-multiplication only
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        a.swap_rows(rank, piv);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a.at(i, col) == 0) continue;
            Int c = a.at(i, col), d = a.at(rank, col);
            for (std::size_t j = col; j < cols; ++j)
                a.at(i, j) = d * a.at(i, j) - c * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

void subsets_rec(std::size_t n, std::size_t k, std::size_t start,
                 std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets_rec(n, k, 0, cur, out);
    return out;
}

} // namespace

std::size_t rank_over(const IntMatrix& m, const FieldSpec& field) {
    if (field.kind == Field::Q) return rank_over_q(m);
    if (field.p < 2 || !is_prime(field.p)) throw error("rank_over: modulus not prime");
    return rank_mod_p(m, field.p);
}

std::vector<Int> char_poly(const IntMatrix& a) {
    if (!a.square()) throw error("char_poly: non-square");
    const std::size_t n = a.rows();
    // Faddeev-LeVerrier; all divisions exact over Z
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMatrix m = IntMatrix::identity(n); // M_0
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
        Int ck;
        Int negtr = -tr;
        mpz_divexact_ui(ck.get_mpz_t(), negtr.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) += ck;
    }
    return c;
}

std::vector<Int> minors(const IntMatrix& m, std::size_t k) {
    if (k > std::min(m.rows(), m.cols())) throw error("minors: k out of range");
    std::vector<Int> out;
    if (k == 0) {
        out.push_back(1);
        return out;
    }
    auto rs = subsets(m.rows(), k);
    auto cs = subsets(m.cols(), k);
    for (const auto& r : rs)
        for (const auto& c : cs) out.push_back(determinant(m.submatrix(r, c)));
    return out;
}

std::optional<std::vector<Int>> solve_linear_diophantine(const IntMatrix& m,
                                                         const std::vector<Int>& b) {
    if (b.size() != m.rows()) throw error("solve_linear_diophantine: shape mismatch");
    SmithForm snf = smith_normal_form(m);
    std::vector<Int> y = snf.u.apply(b);
    const std::size_t n = m.cols();
    std::vector<Int> z(n);
    const std::size_t d = std::min(m.rows(), n);
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Int diag = i < d ? snf.s.at(i, i) : Int(0);
        if (diag == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % diag != 0) return std::nullopt;
            if (i < n) z[i] = y[i] / diag;
        }
    }
    return snf.v.apply(z);
}

} // namespace polyz
