#include "pkroots/matrix.hpp"

#include "pkroots/linalg.hpp"

namespace pkroots {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw internal_error("vec_add: size mismatch");
    Vec r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw internal_error("vec_sub: size mismatch");
    Vec r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x = c * x;
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vec_zero(const Field& f, int n) {
    return Vec(size_t(n), Scalar::zero(f));
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      e_(size_t(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw internal_error("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw internal_error("matrix add: shape or field mismatch");
    Matrix m(*this);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw internal_error("matrix sub: shape or field mismatch");
    Matrix m(*this);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_)
        throw internal_error("matrix mul: shape or field mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            const Scalar& a = (*this)(i, l);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(l, j);
                if (!b.is_zero()) m(i, j) += a * b;
            }
        }
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m(*this);
    for (auto& x : m.e_) x = c * x;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::pow(long k) const {
    if (!is_square()) throw internal_error("pow of non-square matrix");
    Matrix base = *this;
    if (k < 0) {
        auto inv = inverse(*this);
        if (!inv) throw error("negative power of singular matrix");
        base = *inv;
        k = -k;
    }
    Matrix acc = identity(field_, rows_);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw internal_error("apply: dimension mismatch");
    Vec r = vec_zero(field_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero())
                r[i] += (*this)(i, j) * v[j];
    return r;
}

Vec Matrix::row(int i) const {
    Vec r;
    r.reserve(cols_);
    for (int j = 0; j < cols_; ++j) r.push_back((*this)(i, j));
    return r;
}

Vec Matrix::col(int j) const {
    Vec c;
    c.reserve(rows_);
    for (int i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
}

Vec Matrix::diag() const {
    int n = std::min(rows_, cols_);
    Vec d;
    d.reserve(n);
    for (int i = 0; i < n; ++i) d.push_back((*this)(i, i));
    return d;
}

bool Matrix::is_upper_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < std::min(i, cols_); ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool Matrix::is_unitriangular() const {
    if (!is_square() || !is_upper_triangular()) return false;
    for (int i = 0; i < rows_; ++i)
        if (!(*this)(i, i).is_one()) return false;
    return true;
}

bool Matrix::is_strictly_upper() const {
    if (!is_upper_triangular()) return false;
    for (int i = 0; i < std::min(rows_, cols_); ++i)
        if (!(*this)(i, i).is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Scalar& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

std::string Matrix::canonical_key() const {
    std::string s = field_.str() + "|" + std::to_string(rows_) + "x" + std::to_string(cols_) + "|";
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ",";
        s += e_[i].str();
    }
    return s;
}

} // namespace pkroots
