#include "polyz/smith.hpp"

namespace polyz {

namespace {

// position of the smallest nonzero |entry| in the lower-right block at (s,s)
bool find_pivot(const IntMatrix& a, std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < a.rows(); ++i)
        for (std::size_t j = s; j < a.cols(); ++j) {
            const Int& x = a.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                best = ax;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

// rows k, i of both a and u <- unimodular combination putting
// gcd(a(k,k), a(i,k)) at (k,k) and 0 at (i,k)
// When the pivot divides the entry, plain elimination leaves row/column k
// untouched; otherwise a unimodular 2x2 transform replaces the pivot by the
// gcd, strictly shrinking |pivot|.
void row_gcd_transform(IntMatrix& a, IntMatrix& u, std::size_t k, std::size_t i) {
    if (a.at(i, k) % a.at(k, k) == 0) {
        Int q = a.at(i, k) / a.at(k, k);
        a.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
        return;
    }
    Int x, y;
    Int g = gcdext(a.at(k, k), a.at(i, k), x, y);
    Int tk = a.at(k, k) / g, ti = a.at(i, k) / g;
    // [[x, y], [-ti, tk]] has determinant x*tk + y*ti = 1
    for (IntMatrix* m : {&a, &u}) {
        for (std::size_t j = 0; j < m->cols(); ++j) {
            Int rk = m->at(k, j), ri = m->at(i, j);
            m->at(k, j) = x * rk + y * ri;
            m->at(i, j) = tk * ri - ti * rk;
        }
    }
}

void col_gcd_transform(IntMatrix& a, IntMatrix& v, std::size_t k, std::size_t j) {
    if (a.at(k, j) % a.at(k, k) == 0) {
        Int q = a.at(k, j) / a.at(k, k);
        a.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        return;
    }
    Int x, y;
    Int g = gcdext(a.at(k, k), a.at(k, j), x, y);
    Int tk = a.at(k, k) / g, tj = a.at(k, j) / g;
    for (IntMatrix* m : {&a, &v}) {
        for (std::size_t i = 0; i < m->rows(); ++i) {
            Int ck = m->at(i, k), cj = m->at(i, j);
            m->at(i, k) = x * ck + y * cj;
            m->at(i, j) = tk * cj - tj * ck;
        }
    }
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithForm f{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& s = f.s;

    const std::size_t d = std::min(rows, cols);
    for (std::size_t k = 0; k < d; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(s, k, pi, pj)) break;
        s.swap_rows(k, pi);
        f.u.swap_rows(k, pi);
        s.swap_cols(k, pj);
        f.v.swap_cols(k, pj);

        // clearing a row can refill the column and vice versa; each pass
        // replaces the pivot by a proper divisor, so this terminates
        for (;;) {
            bool dirty = false;
            for (std::size_t i = k + 1; i < rows; ++i)
                if (s.at(i, k) != 0) {
                    row_gcd_transform(s, f.u, k, i);
                    dirty = true;
                }
            for (std::size_t j = k + 1; j < cols; ++j)
                if (s.at(k, j) != 0) {
                    col_gcd_transform(s, f.v, k, j);
                    dirty = true;
                }
            if (!dirty) break;
        }

        // pivot must divide every remaining entry before moving on; folding
        // an offending row into row k strictly shrinks the eventual pivot gcd
        bool restart = false;
        for (std::size_t i = k + 1; i < rows && !restart; ++i)
            for (std::size_t j = k + 1; j < cols && !restart; ++j)
                if (s.at(i, j) % s.at(k, k) != 0) {
                    s.add_row_multiple(k, i, 1);
                    f.u.add_row_multiple(k, i, 1);
                    restart = true;
                }
        if (restart) {
            --k;
            continue;
        }
        if (s.at(k, k) < 0) {
            s.negate_row(k);
            f.u.negate_row(k);
        }
    }
    return f;
}

CokernelInvariants cokernel_invariants(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    CokernelInvariants out;
    const std::size_t d = std::min(m.rows(), m.cols());
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < d; ++i) {
        const Int& x = f.s.at(i, i);
        if (x == 0)
            ++zeros;
        else if (x > 1)
            out.torsion.push_back(x);
    }
    // rows beyond all diagonal positions contribute free summands too
    out.free_rank = zeros + (m.rows() > d ? m.rows() - d : 0);
    return out;
}

namespace {

bool generates_impl(const IntMatrix& m, const std::vector<Int>& mu, bool allow_infinite) {
    if (mu.size() != m.rows()) throw error("generates_cokernel: vector length mismatch");
    SmithForm f = smith_normal_form(m);
    std::vector<Int> y = f.u.apply(mu);
    const std::size_t n = m.rows();
    const std::size_t d = std::min(m.rows(), m.cols());

    // cokernel = (+) Z/d_i  (d_i = 0 meaning Z)
    std::vector<Int> diag(n, 0);
    for (std::size_t i = 0; i < d; ++i) diag[i] = f.s.at(i, i);

    std::size_t free_rank = 0;
    for (const Int& x : diag)
        if (x == 0) ++free_rank;
    if (free_rank > 0 && !allow_infinite)
        throw error("generates_cokernel: infinite cokernel, criterion inapplicable");
    if (free_rank > 1) return false; // Z^r is not cyclic for r > 1

    Int torsion_order = 1;
    Int elt_order = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (diag[i] == 0) {
            if (abs(y[i]) != 1) return false; // must hit a generator of the Z summand
            continue;
        }
        torsion_order *= diag[i];
        elt_order = lcm(elt_order, diag[i] / gcd(y[i], diag[i]));
    }
    if (free_rank == 1) {
        // Z (+) torsion is cyclic only when the torsion part vanishes
        return torsion_order == 1;
    }
    return elt_order == torsion_order;
}

} // namespace

bool generates_cokernel(const IntMatrix& m, const std::vector<Int>& mu) {
    return generates_impl(m, mu, false);
}

bool generates_cokernel_allow_infinite(const IntMatrix& m, const std::vector<Int>& mu) {
    return generates_impl(m, mu, true);
}

} // namespace polyz
