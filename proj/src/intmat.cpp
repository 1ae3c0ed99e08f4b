#include "pkroots/intmat.hpp"

#include <algorithm>

namespace pkroots {

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ZMat ZMat::operator*(const ZMat& o) const {
    if (cols_ != o.rows_) throw internal_error("ZMat mul: shape mismatch");
    ZMat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            if ((*this)(i, l) == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o(l, j) != 0) m(i, j) += (*this)(i, l) * o(l, j);
        }
    return m;
}

ZVec ZMat::apply(const ZVec& v) const {
    if (int(v.size()) != cols_) throw internal_error("ZMat apply: dimension mismatch");
    ZVec r(size_t(rows_), mpz_class(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[size_t(j)] != 0)
                r[size_t(i)] += (*this)(i, j) * v[size_t(j)];
    return r;
}

bool ZMat::operator==(const ZMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string ZMat::str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        s += i ? ";[" : "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += (*this)(i, j).get_str();
        }
        s += "]";
    }
    return s + "]";
}

mpz_class zmat_det(const ZMat& m) {
    if (m.rows() != m.cols()) throw error("zmat_det of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    ZMat a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = q;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

struct SmithWork {
    ZMat u, d, v;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
        for (int i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
    }
    void add_row(int dst, int src, const mpz_class& f) { // row_dst += f * row_src
        for (int j = 0; j < d.cols(); ++j) d(dst, j) += f * d(src, j);
        for (int j = 0; j < u.cols(); ++j) u(dst, j) += f * u(src, j);
    }
    void add_col(int dst, int src, const mpz_class& f) {
        for (int i = 0; i < d.rows(); ++i) d(i, dst) += f * d(i, src);
        for (int i = 0; i < v.rows(); ++i) v(i, dst) += f * v(i, src);
    }
    void negate_row(int r) {
        for (int j = 0; j < d.cols(); ++j) d(r, j) = -d(r, j);
        for (int j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }

    // Smallest nonzero |entry| in the trailing submatrix, row-then-column
    // tie-break. Returns false when the submatrix is zero.
    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        mpz_class best;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j) {
                if (d(i, j) == 0) continue;
                mpz_class a = abs(d(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    bool row_col_clear(int t) const {
        for (int i = t + 1; i < d.rows(); ++i)
            if (d(i, t) != 0) return false;
        for (int j = t + 1; j < d.cols(); ++j)
            if (d(t, j) != 0) return false;
        return true;
    }
};

} // namespace

SmithDecomposition smith_normal_form(const ZMat& m) {
    SmithWork w{ZMat::identity(m.rows()), m, ZMat::identity(m.cols())};
    const int steps = std::min(m.rows(), m.cols());
    for (int t = 0; t < steps; ++t) {
        int pi = 0, pj = 0;
        if (!w.find_pivot(t, pi, pj)) break; // remaining block is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        for (;;) {
            // clear column t below the pivot
            for (int i = t + 1; i < w.d.rows(); ++i) {
                if (w.d(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.d(i, t).get_mpz_t(), w.d(t, t).get_mpz_t());
                w.add_row(i, t, -q);
            }
            // clear row t right of the pivot
            for (int j = t + 1; j < w.d.cols(); ++j) {
                if (w.d(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.d(t, j).get_mpz_t(), w.d(t, t).get_mpz_t());
                w.add_col(j, t, -q);
            }
            if (!w.row_col_clear(t)) {
                // a remainder survived; re-pick the pivot and repeat
                if (!w.find_pivot(t, pi, pj))
                    throw internal_error("smith_normal_form: lost all pivots");
                w.swap_rows(t, pi);
                w.swap_cols(t, pj);
                continue;
            }
            // force divisibility of the trailing block by the pivot
            int bi = -1;
            for (int i = t + 1; i < w.d.rows() && bi < 0; ++i)
                for (int j = t + 1; j < w.d.cols(); ++j)
                    if (w.d(i, j) % w.d(t, t) != 0) { bi = i; break; }
            if (bi < 0) break;
            w.add_row(t, bi, 1);
        }
        if (w.d(t, t) < 0) w.negate_row(t);
    }
    return SmithDecomposition{w.u, w.d, w.v};
}

std::optional<IntSolution> solve_integer_system(const ZMat& m, const ZVec& c) {
    if (int(c.size()) != m.rows())
        throw error("solve_integer_system: dimension mismatch");
    SmithDecomposition s = smith_normal_form(m);
    ZVec uc = s.U.apply(c);
    const int nd = std::min(m.rows(), m.cols());
    ZVec y(size_t(m.cols()), mpz_class(0));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class d = (i < nd) ? s.D(i, i) : mpz_class(0);
        if (d == 0) {
            if (uc[size_t(i)] != 0) return std::nullopt;
        } else {
            if (uc[size_t(i)] % d != 0) return std::nullopt;
            y[size_t(i)] = uc[size_t(i)] / d;
        }
    }
    IntSolution sol;
    sol.particular = s.V.apply(y);
    for (int j = 0; j < m.cols(); ++j) {
        bool free_col = (j >= nd) || s.D(j, j) == 0;
        if (!free_col) continue;
        ZVec k(size_t(m.cols()), mpz_class(0));
        for (int i = 0; i < m.cols(); ++i) k[size_t(i)] = s.V(i, j);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

} // namespace pkroots
