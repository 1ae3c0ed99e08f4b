#pragma once

#include <vector>

#include "pkroots/scalar.hpp"

namespace pkroots {

using Vec = std::vector<Scalar>;

// Coordinate vector helpers (all entries must share one field).
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);
Vec vec_zero(const Field& f, int n);
std::string vec_str(const Vec& v);

// Dense matrix over one exact field, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(const Field& f, int rows, int cols);

    static Matrix identity(const Field& f, int n);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    Scalar& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    // Matrix power; negative exponents require invertibility.
    Matrix pow(long k) const;

    Vec apply(const Vec& v) const; // matrix * column vector
    Vec row(int i) const;
    Vec col(int j) const;

    Vec diag() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_upper_triangular() const;
    bool is_unitriangular() const; // upper triangular with unit diagonal
    bool is_strictly_upper() const;
    bool is_identity() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // Canonical serialization: field tag + shape + row-major entries in
    // lowest terms. Keys element indices in enumerations.
    std::string canonical_key() const;

private:
    Field field_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

} // namespace pkroots
