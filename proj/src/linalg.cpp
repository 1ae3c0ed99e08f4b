#include "pkroots/linalg.hpp"

#include <algorithm>

namespace pkroots {

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        Scalar inv = *a(r, c).inverse();
        for (int j = c; j < cols; ++j) a(r, j) = inv * a(r, j);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar f = a(i, c);
            for (int j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(a), r, std::move(pivots)};
}

Subspace kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    const int cols = m.cols();
    const Field& f = m.field();
    std::vector<bool> is_pivot(cols, false);
    for (int p : rr.pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v = vec_zero(f, cols);
        v[c] = Scalar::one(f);
        for (int i = 0; i < rr.rank; ++i)
            v[rr.pivots[i]] = -rr.reduced(i, c);
        basis.push_back(std::move(v));
    }
    return Subspace::from_span(f, cols, basis);
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& c) {
    if (int(c.size()) != m.rows())
        throw error("solve_linear: dimension mismatch");
    const Field& f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = c[i];
    }
    RrefResult rr = rref(aug);
    // inconsistent iff a pivot lands in the augmented column
    for (int p : rr.pivots)
        if (p == m.cols()) return std::nullopt;
    Vec w = vec_zero(f, m.cols());
    for (int i = 0; i < int(rr.pivots.size()); ++i)
        w[rr.pivots[i]] = rr.reduced(i, m.cols());
    return w;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw error("inverse of non-square matrix");
    const int n = m.rows();
    const Field& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(f);
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
    Matrix inv(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

Scalar det(const Matrix& m) {
    if (!m.is_square()) throw error("det of non-square matrix");
    Matrix a = m;
    const int n = a.rows();
    const Field& f = a.field();
    Scalar d = Scalar::one(f);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!a(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) return Scalar::zero(f);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
            d = -d;
        }
        d = d * a(c, c);
        Scalar inv = *a(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Scalar fac = a(i, c) * inv;
            for (int j = c; j < n; ++j) a(i, j) = a(i, j) - fac * a(c, j);
        }
    }
    return d;
}

Subspace image(const Matrix& m) {
    std::vector<Vec> cols;
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return Subspace::from_span(m.field(), m.rows(), cols);
}

Subspace Subspace::zero(const Field& f, int ambient) {
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(const Field& f, int ambient) {
    std::vector<Vec> rows;
    for (int i = 0; i < ambient; ++i) {
        Vec v = vec_zero(f, ambient);
        v[i] = Scalar::one(f);
        rows.push_back(std::move(v));
    }
    return from_span(f, ambient, rows);
}

Subspace Subspace::from_span(const Field& f, int ambient, const std::vector<Vec>& vectors) {
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
        if (int(v.size()) != ambient)
            throw internal_error("from_span: ambient dimension mismatch");
    RrefResult rr = rref(Matrix::from_rows(f, vectors));
    for (int i = 0; i < rr.rank; ++i) s.basis_.push_back(rr.reduced.row(i));
    s.pivots_ = rr.pivots;
    return s;
}

bool Subspace::contains(const Vec& v) const {
    return vec_is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw internal_error("subspace sum: ambient mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return from_span(field_, ambient_, all);
}

Vec Subspace::reduce(const Vec& v) const {
    if (int(v.size()) != ambient_) throw internal_error("reduce: ambient mismatch");
    Vec r = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
        const Scalar& c = r[pivots_[i]];
        if (!c.is_zero()) r = vec_sub(r, vec_scale(c, basis_[i]));
    }
    return r;
}

Vec Subspace::coords_of(const Vec& v) const {
    if (!contains(v))
        throw precondition_error("coords_of: vector not in subspace");
    Vec c;
    c.reserve(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i) c.push_back(v[pivots_[i]]);
    return c;
}

Vec Subspace::from_coords(const Vec& coords) const {
    if (coords.size() != basis_.size())
        throw internal_error("from_coords: dimension mismatch");
    Vec v = vec_zero(field_, ambient_);
    for (size_t i = 0; i < basis_.size(); ++i)
        if (!coords[i].is_zero()) v = vec_add(v, vec_scale(coords[i], basis_[i]));
    return v;
}

Subspace Subspace::complement_of(const Subspace& w) const {
    if (!contains(w))
        throw precondition_error("complement_of: not a subspace of this space");
    std::vector<Vec> reduced;
    for (const auto& b : basis_) {
        Vec r = w.reduce(b);
        if (!vec_is_zero(r)) reduced.push_back(std::move(r));
    }
    return from_span(field_, ambient_, reduced);
}

} // namespace pkroots
