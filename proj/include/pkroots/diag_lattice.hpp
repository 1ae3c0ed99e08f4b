#pragma once

#include <map>

#include "pkroots/intmat.hpp"
#include "pkroots/matrix.hpp"

namespace pkroots {

// Signed prime factorization of a nonzero rational.
struct RationalFactorization {
    int sign = 0; // 1 for negative values
    std::map<mpz_class, long> exponents;
};

// Trial-division factorization; throws unsupported_error when a cofactor
// resists the search budget.
RationalFactorization factor_rational(const mpq_class& q);

// Multiplicative coordinates for diagonal class vectors of a rational
// triangular group: per diagonal position a sign bit plus an integer
// exponent vector over the primes appearing in the generators' diagonals.
class DiagonalLattice {
public:
    struct Encoding {
        std::vector<int> signs; // one bit per diagonal position
        ZVec exponents;         // dim * primes.size(), position-major
    };

    static DiagonalLattice build(int dim, const std::vector<Matrix>& generators);

    const std::vector<mpz_class>& primes() const { return primes_; }
    int dim() const { return dim_; }
    int num_generators() const { return int(gen_encodings_.size()); }
    const Encoding& generator_encoding(int i) const { return gen_encodings_[size_t(i)]; }
    const ZMat& exponent_matrix() const { return exp_matrix_; } // rows: dim*primes, cols: generators

    // Encoding of a diagonal vector of nonzero rationals; nullopt when a
    // prime outside the generator support appears.
    std::optional<Encoding> encode(const Vec& diag) const;

    // All classes b in the generated quotient with b^k = target, returned as
    // one exponent word per class, deterministic order. Exponent coordinates
    // of b are uniquely determined; distinct roots differ in signs only.
    std::vector<ZVec> solve_root_words(const Encoding& target, long k) const;

    // A generating set of the lattice of words representing the trivial
    // class (used for validating that diagonal relations land in N).
    std::vector<ZVec> relation_generators() const;

    // Sign vector of the class represented by word z.
    std::vector<int> signs_of_word(const ZVec& z) const;

    // True when the exponent sublattice has rank 0, i.e. the class group is
    // finite (pure sign torsion).
    bool finite_class_group() const;

    // Enumerate all classes when the class group is finite.
    std::vector<ZVec> enumerate_class_words() const;

private:
    int dim_ = 0;
    std::vector<mpz_class> primes_;
    std::vector<Encoding> gen_encodings_;
    ZMat exp_matrix_;
    std::vector<ZVec> kernel_; // lattice basis of ker(exp_matrix_)
};

} // namespace pkroots
