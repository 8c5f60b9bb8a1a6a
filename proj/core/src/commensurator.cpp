#include "polyz/commensurator.hpp"

#include "polyz/poly.hpp"
#include "polyz/smith.hpp"

#include <numeric>

namespace polyz {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& a) {
    RatMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw error("RatMatrix: dimension mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
        }
    return out;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw error("RatMatrix: vector dimension mismatch");
    std::vector<Rat> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

Rat RatMatrix::det() const {
    if (rows_ != cols_) throw error("RatMatrix: determinant of non-square matrix");
    RatMatrix m = *this;
    std::size_t n = rows_;
    Rat d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / m.at(col, col);
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    if (rows_ != cols_) throw error("RatMatrix: inverse of non-square matrix");
    std::size_t n = rows_;
    RatMatrix m = *this;
    RatMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rat p = m.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Int RatMatrix::denominator_lcm() const {
    Int m = 1;
    for (const Rat& x : e_) m = lcm(m, Int(x.get_den()));
    return m;
}

bool RatMatrix::is_integral() const {
    for (const Rat& x : e_)
        if (x.get_den() != 1) return false;
    return true;
}

std::optional<IntMatrix> RatMatrix::to_int() const {
    if (!is_integral()) return std::nullopt;
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = Int(at(i, j).get_num());
    return m;
}

bool has_root_of_unity_eigenvalue(const IntMatrix& a) {
    if (!a.square()) throw error("has_root_of_unity_eigenvalue: non-square matrix");
    if (a.rows() > 3)
        throw error("has_root_of_unity_eigenvalue: only matrices up to 3x3 supported");
    QPoly chi = QPoly::from_int(IntPoly(char_poly(a)));
    // cyclotomics of degree <= 3: Phi_1, Phi_2, Phi_3, Phi_4, Phi_6
    const std::vector<IntPoly> cyclo = {
        IntPoly({-1, 1}), IntPoly({1, 1}), IntPoly({1, 1, 1}), IntPoly({1, 0, 1}),
        IntPoly({1, -1, 1})};
    for (const IntPoly& phi : cyclo) {
        QPoly x, y;
        QPoly g = qpoly_gcdext(chi, QPoly::from_int(phi), x, y);
        if (g.degree() >= 1) return true;
    }
    return false;
}

AmbientAction AmbientAction::validate(IntMatrix a) {
    if (a.rows() != 3 || a.cols() != 3) throw error("AmbientAction: matrix must be 3x3");
    if (abs(determinant(a)) != 1) throw error("AmbientAction: matrix must be unimodular");
    if (has_root_of_unity_eigenvalue(a))
        throw error("AmbientAction: action has a root-of-unity eigenvalue (excluded case)");
    return AmbientAction{std::move(a)};
}

IntMatrix int_matrix_pow(const IntMatrix& a, unsigned long k) {
    if (!a.square()) throw error("int_matrix_pow: non-square matrix");
    IntMatrix result = IntMatrix::identity(a.rows());
    for (unsigned long i = 0; i < k; ++i) result = result * a;
    return result;
}

std::vector<RatMatrix> centralizer_basis(const AmbientAction& a, unsigned long k) {
    if (k == 0) throw error("centralizer_basis: k must be >= 1");
    IntMatrix ak = int_matrix_pow(a.a, k);
    std::size_t n = 3;
    // unknowns x_{il} flattened as 3i + l; equations X Ak - Ak X = 0
    IntMatrix sys(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t eq = n * i + j;
            for (std::size_t l = 0; l < n; ++l) {
                sys.at(eq, n * i + l) += ak.at(l, j);
                sys.at(eq, n * l + j) -= ak.at(i, l);
            }
        }
    SmithForm snf = smith_normal_form(sys);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n * n; ++i)
        if (snf.s.at(i, i) != 0) ++rank;
    std::vector<RatMatrix> basis;
    for (std::size_t col = rank; col < n * n; ++col) {
        RatMatrix x(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) x.at(i, l) = snf.v.at(n * i + l, col);
        basis.push_back(x);
    }
    return basis;
}

IntMatrix nu(const AmbientAction& a, unsigned long k, unsigned long l) {
    if (k == 0 || l == 0) throw error("nu: k, l must be >= 1");
    IntMatrix ak = int_matrix_pow(a.a, k);
    IntMatrix sum(3, 3);
    IntMatrix power = IntMatrix::identity(3);
    for (unsigned long i = 0; i < l; ++i) {
        sum = sum + power;
        power = power * ak;
    }
    return sum;
}

void validate_triple(const AmbientAction& a, const CommTriple& t) {
    if (t.b.rows() != 3 || t.b.cols() != 3) throw error("triple: B must be 3x3");
    if (t.w.size() != 3) throw error("triple: w must have length 3");
    if (t.k == 0) throw error("triple: k must be >= 1");
    if (t.b.det() == 0) throw error("triple: B must be invertible");
    RatMatrix ak = RatMatrix::from_int(int_matrix_pow(a.a, t.k));
    if (!(t.b * ak == ak * t.b)) throw error("triple: B does not commute with A^k");
}

CommTriple triple_normalize(const AmbientAction& a, const CommTriple& t, unsigned long l) {
    if (l == 0) throw error("triple_normalize: l must be >= 1");
    CommTriple out;
    out.b = t.b;
    IntMatrix n = nu(a, t.k, l);
    out.w = n.apply(t.w);
    out.k = t.k * l;
    return out;
}

bool triple_equiv(const AmbientAction& a, const CommTriple& t1, const CommTriple& t2) {
    validate_triple(a, t1);
    validate_triple(a, t2);
    if (!(t1.b == t2.b)) return false;
    unsigned long k = std::lcm(t1.k, t2.k);
    CommTriple u1 = triple_normalize(a, t1, k / t1.k);
    CommTriple u2 = triple_normalize(a, t2, k / t2.k);
    // nu_s(A^k) is invertible for every s (no root-of-unity eigenvalues),
    // so agreement at the lcm level decides equivalence
    return u1.w == u2.w;
}

namespace {

IntMatrix mat_mod(const IntMatrix& a, const Int& m) {
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = mod_pos(a.at(i, j), m);
    return out;
}

// multiplicative order of A^k in GL(3, Z/m)
unsigned long order_mod(const IntMatrix& ak, const Int& m) {
    IntMatrix id = IntMatrix::identity(3);
    IntMatrix cur = mat_mod(ak, m);
    IntMatrix base = cur;
    unsigned long e = 1;
    const unsigned long guard = 1000000;
    while (!(cur == id)) {
        cur = mat_mod(cur * base, m);
        if (++e > guard) throw error("triple_compose: denominators never clear (order bound)");
    }
    return e;
}

} // namespace

CommTriple triple_compose(const AmbientAction& a, const CommTriple& t1, const CommTriple& t2) {
    validate_triple(a, t1);
    validate_triple(a, t2);
    unsigned long k = std::lcm(t1.k, t2.k);
    CommTriple u1 = triple_normalize(a, t1, k / t1.k);
    CommTriple u2 = triple_normalize(a, t2, k / t2.k);

    Int m = u1.b.denominator_lcm();
    if (m > 1) {
        std::vector<Rat> img = u1.b.apply(u2.w);
        bool integral = true;
        for (const Rat& x : img)
            if (x.get_den() != 1) integral = false;
        if (!integral) {
            // nu_{em}(A^k) = nu_e(A^k) nu_m(A^{ke}) == 0 mod m, where e is the
            // order of A^k mod m; lifting by l = e m clears the denominators
            IntMatrix ak = int_matrix_pow(a.a, k);
            unsigned long e = order_mod(ak, m);
            if (m.fits_ulong_p() == 0)
                throw error("triple_compose: denominator too large");
            unsigned long l = e * m.get_ui();
            u1 = triple_normalize(a, u1, l);
            u2 = triple_normalize(a, u2, l);
            k *= l;
        }
    }

    std::vector<Rat> bw = u1.b.apply(u2.w);
    CommTriple out;
    out.b = u1.b * u2.b;
    out.w.resize(3);
    for (std::size_t i = 0; i < 3; ++i) {
        if (bw[i].get_den() != 1) throw error("triple_compose: denominators did not clear");
        out.w[i] = u1.w[i] + Int(bw[i].get_num());
    }
    out.k = k;
    validate_triple(a, out);
    return out;
}

std::optional<Int> comm_of_Zn_validate(const RatMatrix& b) {
    if (b.rows() != b.cols()) throw error("comm_of_Zn: matrix must be square");
    if (b.det() == 0) return std::nullopt;
    return b.denominator_lcm();
}

} // namespace polyz
