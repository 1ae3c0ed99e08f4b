#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "pkroots/errors.hpp"

namespace pkroots {

enum class FieldKind : uint8_t { Rational, Prime };

// Field descriptor: the rationals, or a prime field F_p with p < 2^31.
struct Field {
    FieldKind kind = FieldKind::Rational;
    long p = 0;

    static Field Q() { return Field{FieldKind::Rational, 0}; }
    static Field Fp(long p); // validates primality

    bool is_rational() const { return kind == FieldKind::Rational; }
    long characteristic() const { return kind == FieldKind::Prime ? p : 0; }

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const;
};

// Exact field element: a reduced rational with positive denominator, or a
// residue in [0, p). Mixed-field arithmetic is rejected, never coerced.
class Scalar {
public:
    Scalar() : field_(Field::Q()), q_(0), r_(0) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long v);
    static Scalar of_mpz(const Field& f, const mpz_class& v);
    static Scalar rational(const mpq_class& q);
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar fp(long p, long residue);

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    // Exact division; throws error on division by zero.
    Scalar operator/(const Scalar& o) const;

    std::optional<Scalar> inverse() const;

    // Integer power; negative exponents require invertibility.
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical total order within one field (residue order / rational order).
    // Used only for deterministic sorting, not for analysis.
    bool operator<(const Scalar& o) const;

    // Canonical text form: decimal residue, or "p/q" in lowest terms.
    std::string str() const;

    // Rational payload access (Rational fields only).
    const mpq_class& rat() const;
    // Residue payload access (Prime fields only).
    long residue() const;

private:
    Scalar(const Field& f, mpq_class q, long r)
        : field_(f), q_(std::move(q)), r_(r) {}

    void check_same_field(const Scalar& o) const;

    Field field_;
    mpq_class q_; // Rational payload
    long r_;      // Prime payload, 0 <= r_ < p
};

bool is_prime(long p);

} // namespace pkroots
