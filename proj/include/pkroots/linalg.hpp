#pragma once

#include <optional>

#include "pkroots/matrix.hpp"

namespace pkroots {

class Subspace;

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivots; // pivot column per pivot row
};

// Reduced row echelon form with deterministic pivoting: scan columns left to
// right, take the first nonzero row.
RrefResult rref(const Matrix& m);

// Canonical echelon basis of the null space; dimension = cols - rank.
Subspace kernel_basis(const Matrix& m);

// One exact solution of M*w = c if consistent (free variables set to zero).
std::optional<Vec> solve_linear(const Matrix& m, const Vec& c);

std::optional<Matrix> inverse(const Matrix& m);
Scalar det(const Matrix& m);

// Column space of m as a canonical subspace of F^rows.
Subspace image(const Matrix& m);

// Linear subspace of F^ambient with a canonical reduced-echelon basis, so
// equality is a plain data comparison.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(const Field& f, int ambient);
    static Subspace full(const Field& f, int ambient);
    static Subspace from_span(const Field& f, int ambient, const std::vector<Vec>& vectors);

    const Field& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const; // other subseteq this
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& o) const;

    // Canonical representative of v modulo this subspace (pivot coordinates
    // eliminated). reduce(v) == 0 iff contains(v).
    Vec reduce(const Vec& v) const;

    // Coordinates of v in the stored basis; requires contains(v).
    Vec coords_of(const Vec& v) const;
    Vec from_coords(const Vec& coords) const;

    // Canonical complement of w inside this subspace; requires w subseteq this.
    Subspace complement_of(const Subspace& w) const;

private:
    Field field_;
    int ambient_;
    std::vector<Vec> basis_;
    std::vector<int> pivots_;
};

} // namespace pkroots
