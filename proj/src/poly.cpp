#include "pkroots/poly.hpp"

#include <algorithm>

namespace pkroots {

Poly::Poly(const Field& f, std::vector<Scalar> ascending)
    : field_(f), coeffs_(std::move(ascending)) {
    for (const auto& c : coeffs_)
        if (c.field() != field_) throw internal_error("poly coefficient field mismatch");
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
    return Poly(c.field(), {c});
}

Poly Poly::x(const Field& f) {
    return Poly(f, {Scalar::zero(f), Scalar::one(f)});
}

Poly Poly::ones_sum(const Field& f, long k) {
    if (k < 1) throw precondition_error("ones_sum requires k >= 1");
    return Poly(f, std::vector<Scalar>(size_t(k), Scalar::one(f)));
}

bool Poly::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0].is_one();
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= int(coeffs_.size())) return Scalar::zero(field_);
    return coeffs_[size_t(i)];
}

Scalar Poly::leading() const {
    if (is_zero()) return Scalar::zero(field_);
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (field_ != o.field_) throw error("poly add: field mismatch");
    std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(int(i)) + o.coeff(int(i));
    return Poly(field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    if (field_ != o.field_) throw error("poly sub: field mismatch");
    std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(int(i)) - o.coeff(int(i));
    return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (field_ != o.field_) throw error("poly mul: field mismatch");
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(field_, std::move(c));
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (field_ != d.field_) throw error("poly divmod: field mismatch");
    if (d.is_zero()) throw error("poly division by zero");
    Poly r = *this;
    std::vector<Scalar> q(size_t(std::max(0, degree() - d.degree() + 1)), Scalar::zero(field_));
    Scalar lead_inv = *d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Scalar f = r.leading() * lead_inv;
        q[size_t(shift)] = f;
        std::vector<Scalar> sub(size_t(shift), Scalar::zero(field_));
        for (const auto& dc : d.coeffs_) sub.push_back(f * dc);
        r = r - Poly(field_, std::move(sub));
    }
    return {Poly(field_, std::move(q)), r};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Scalar inv = *leading().inverse();
    std::vector<Scalar> c = coeffs_;
    for (auto& x : c) x = inv * x;
    return Poly(field_, std::move(c));
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Scalar c = coeff(i);
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || !c.is_one()) s += c.str();
        if (i > 0) {
            if (!c.is_one()) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly char_poly(const Matrix& m) {
    if (!m.is_square()) throw error("char_poly of non-square matrix");
    const Field& f = m.field();
    const int n = m.rows();
    // Berkowitz recursion: coefficient vector (descending degree) of the
    // leading r x r submatrix, updated by a Toeplitz product per step.
    std::vector<Scalar> cur{Scalar::one(f)};
    for (int r = 1; r <= n; ++r) {
        // Toeplitz column t_0..t_r for the step from size r-1 to r
        std::vector<Scalar> t(size_t(r) + 1, Scalar::zero(f));
        t[0] = Scalar::one(f);
        t[1] = -m(r - 1, r - 1);
        if (r >= 2) {
            Vec v(size_t(r - 1), Scalar::zero(f));
            for (int i = 0; i < r - 1; ++i) v[size_t(i)] = m(i, r - 1);
            for (int k = 2; k <= r; ++k) {
                Scalar dot = Scalar::zero(f);
                for (int i = 0; i < r - 1; ++i) dot += m(r - 1, i) * v[size_t(i)];
                t[size_t(k)] = -dot;
                if (k < r) {
                    Vec nv(size_t(r - 1), Scalar::zero(f));
                    for (int i = 0; i < r - 1; ++i)
                        for (int j = 0; j < r - 1; ++j)
                            if (!m(i, j).is_zero() && !v[size_t(j)].is_zero())
                                nv[size_t(i)] += m(i, j) * v[size_t(j)];
                    v = std::move(nv);
                }
            }
        }
        std::vector<Scalar> next(size_t(r) + 1, Scalar::zero(f));
        for (size_t i = 0; i <= size_t(r); ++i)
            for (size_t j = 0; j < cur.size() && j <= i; ++j)
                next[i] += t[i - j] * cur[j];
        cur = std::move(next);
    }
    // cur holds descending coefficients of det(xI - M); convert to ascending
    std::vector<Scalar> asc(cur.rbegin(), cur.rend());
    Poly p(f, std::move(asc));
    if (p.degree() != n || !p.leading().is_one())
        throw internal_error("char_poly: recursion produced a non-monic result");
    return p;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

namespace {
// Divisors of |v| up to a search budget; nullopt when v is too hard to factor.
std::optional<std::vector<mpz_class>> divisors_of(const mpz_class& value, size_t budget) {
    mpz_class v = abs(value);
    if (v == 0) return std::nullopt;
    std::vector<std::pair<mpz_class, int>> fact;
    mpz_class d = 2;
    while (d * d <= v) {
        if (mpz_cmp_ui(d.get_mpz_t(), 1000000) > 0) return std::nullopt;
        if (v % d == 0) {
            int e = 0;
            while (v % d == 0) { v /= d; ++e; }
            fact.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (v > 1) fact.emplace_back(v, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fact) {
        size_t old = divs.size();
        mpz_class pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < old; ++j) {
                divs.push_back(divs[j] * pe);
                if (divs.size() > budget) return std::nullopt;
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}
} // namespace

std::optional<std::vector<Scalar>> roots_in_field(const Poly& p) {
    if (p.is_zero()) throw precondition_error("roots_in_field of zero polynomial");
    const Field& f = p.field();
    std::vector<Scalar> roots;
    if (!f.is_rational()) {
        for (long r = 0; r < f.p; ++r) {
            Scalar x = Scalar::fp(f.p, r);
            if (p.eval(x).is_zero()) roots.push_back(x);
        }
        return roots;
    }
    // Rational candidates num/den with num | constant, den | leading, after
    // clearing denominators.
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs())
        lcm_den = lcm(lcm_den, c.rat().get_den());
    std::vector<mpz_class> ic;
    for (const auto& c : p.coeffs()) {
        mpq_class q = c.rat() * mpq_class(lcm_den);
        ic.push_back(q.get_num());
    }
    // strip zero low-order coefficients: x = 0 is then a root
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Scalar::zero(f));
    if (low >= ic.size()) return roots;
    auto num_divs = divisors_of(ic[low], 4096);
    auto den_divs = divisors_of(ic.back(), 4096);
    if (!num_divs || !den_divs) return std::nullopt;
    for (const auto& nu : *num_divs)
        for (const auto& de : *den_divs)
            for (int sign : {1, -1}) {
                Scalar x = Scalar::rational(sign * nu, de);
                if (p.eval(x).is_zero()) roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace pkroots
