#pragma once

#include "pkroots/matrix.hpp"

namespace pkroots {

// Dense univariate polynomial over one exact field. Zero polynomial has an
// empty coefficient list; otherwise the leading coefficient is nonzero.
class Poly {
public:
    explicit Poly(const Field& f) : field_(f) {}
    Poly(const Field& f, std::vector<Scalar> ascending);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Scalar& c);
    static Poly x(const Field& f);
    // 1 + x + ... + x^(k-1); its roots are the nontrivial k-th roots of unity
    // when k is coprime to the characteristic.
    static Poly ones_sum(const Field& f, long k);

    const Field& field() const { return field_; }
    int degree() const { return int(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(int i) const;
    Scalar leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Euclidean division (field coefficients): *this = q*d + r, deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    Poly monic() const;
    Scalar eval(const Scalar& x) const; // exact Horner

    std::string str() const; // e.g. "x^2 + 4*x + 3"

private:
    void trim();
    Field field_;
    std::vector<Scalar> coeffs_; // ascending degree
};

// Monic characteristic polynomial det(xI - M), computed division-free
// (Berkowitz recursion), exact over any field.
Poly char_poly(const Matrix& m);

// Monic gcd via the Euclidean algorithm; gcd(p, 0) is monic p.
Poly poly_gcd(const Poly& a, const Poly& b);

// Roots of p lying in its coefficient field, sorted in canonical scalar
// order. For F_p a full residue scan; over Q the rational root test.
// Returns nothing when the search is infeasible (oversized constants).
std::optional<std::vector<Scalar>> roots_in_field(const Poly& p);

} // namespace pkroots
