#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pkroots/errors.hpp"

namespace pkroots {

using ZVec = std::vector<mpz_class>;

// Dense arbitrary-precision integer matrix, row-major.
class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static ZMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const mpz_class& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    mpz_class& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }

    ZMat operator*(const ZMat& o) const;
    ZVec apply(const ZVec& v) const;
    bool operator==(const ZMat& o) const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<mpz_class> e_;
};

mpz_class zmat_det(const ZMat& m); // fraction-free Bareiss, exact

// U * M * V = D with U, V unimodular; D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
    ZMat U, D, V;
};

// Deterministic pivoting: smallest nonzero absolute value, ties broken by
// row then column order.
SmithDecomposition smith_normal_form(const ZMat& m);

// Full integer solution set of M*z = c: one particular solution plus a basis
// of the solution lattice of M*z = 0. Absent iff no integer solution exists.
struct IntSolution {
    ZVec particular;
    std::vector<ZVec> kernel;
};

std::optional<IntSolution> solve_integer_system(const ZMat& m, const ZVec& c);

} // namespace pkroots
