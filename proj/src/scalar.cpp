#include "pkroots/scalar.hpp"

namespace pkroots {

bool is_prime(long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Field Field::Fp(long p) {
    if (p >= (1L << 31))
        throw validation_error("prime modulus too large: " + std::to_string(p));
    if (!is_prime(p))
        throw validation_error("modulus is not prime: " + std::to_string(p));
    return Field{FieldKind::Prime, p};
}

std::string Field::str() const {
    return is_rational() ? "Q" : "F" + std::to_string(p);
}

namespace {
long mod_reduce(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

// Residue of v modulo p for arbitrary-precision v.
long mod_reduce(const mpz_class& v, long p) {
    mpz_class r = v % p;
    long x = r.get_si();
    return x < 0 ? x + p : x;
}

long mod_inverse(long a, long p) {
    // extended Euclid; a in [1, p)
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1)
        throw error("element not invertible mod " + std::to_string(p));
    return t < 0 ? t + p : t;
}
} // namespace

Scalar Scalar::zero(const Field& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const Field& f) {
    return f.is_rational() ? Scalar(f, mpq_class(1), 0) : Scalar(f, mpq_class(0), 1 % f.p);
}

Scalar Scalar::of_int(const Field& f, long v) {
    if (f.is_rational()) return Scalar(f, mpq_class(v), 0);
    return Scalar(f, mpq_class(0), mod_reduce(v, f.p));
}

Scalar Scalar::of_mpz(const Field& f, const mpz_class& v) {
    if (f.is_rational()) return Scalar(f, mpq_class(v), 0);
    return Scalar(f, mpq_class(0), mod_reduce(v, f.p));
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(Field::Q(), c, 0);
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(Field::Q(), q, 0);
}

Scalar Scalar::fp(long p, long residue) {
    Field f = Field::Fp(p);
    return Scalar(f, mpq_class(0), mod_reduce(residue, p));
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw error("mixed-field arithmetic: " + field_.str() + " vs " + o.field_.str());
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, q_ + o.q_, 0);
    return Scalar(field_, mpq_class(0), mod_reduce(r_ + o.r_, field_.p));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, q_ - o.q_, 0);
    return Scalar(field_, mpq_class(0), mod_reduce(r_ - o.r_, field_.p));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, q_ * o.q_, 0);
    // p < 2^31, so the product fits in a long
    return Scalar(field_, mpq_class(0), mod_reduce(r_ * o.r_, field_.p));
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, -q_, 0);
    return Scalar(field_, mpq_class(0), mod_reduce(-r_, field_.p));
}

Scalar Scalar::operator/(const Scalar& o) const {
    auto inv = o.inverse();
    if (!inv) throw error("division by zero in " + field_.str());
    return *this * *inv;
}

std::optional<Scalar> Scalar::inverse() const {
    if (is_zero()) return std::nullopt;
    if (field_.is_rational()) return Scalar(field_, 1 / q_, 0);
    return Scalar(field_, mpq_class(0), mod_inverse(r_, field_.p));
}

Scalar Scalar::pow(long e) const {
    Scalar base = *this;
    if (e < 0) {
        auto inv = inverse();
        if (!inv) throw error("negative power of zero");
        base = *inv;
        e = -e;
    }
    Scalar acc = Scalar::one(field_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    return field_.is_rational() ? q_ < o.q_ : r_ < o.r_;
}

std::string Scalar::str() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

const mpq_class& Scalar::rat() const {
    if (!field_.is_rational()) throw internal_error("rat() on prime-field scalar");
    return q_;
}

long Scalar::residue() const {
    if (field_.is_rational()) throw internal_error("residue() on rational scalar");
    return r_;
}

} // namespace pkroots
