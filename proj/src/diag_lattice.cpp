#include "pkroots/diag_lattice.hpp"

#include <algorithm>
#include <set>

#include "pkroots/linalg.hpp"

namespace pkroots {

RationalFactorization factor_rational(const mpq_class& q) {
    if (q == 0) throw error("factor_rational: zero has no factorization");
    RationalFactorization r;
    r.sign = (q < 0) ? 1 : 0;
    auto accumulate = [&](mpz_class v, long dir) {
        v = abs(v);
        mpz_class d = 2;
        while (v > 1) {
            if (d * d > v) {
                r.exponents[v] += dir;
                break;
            }
            if (mpz_cmp_ui(d.get_mpz_t(), 10000000) > 0)
                throw unsupported_error("factor_rational: entry too hard to factor: " + q.get_str());
            if (v % d == 0) {
                long e = 0;
                while (v % d == 0) { v /= d; ++e; }
                r.exponents[d] += dir * e;
            }
            d += (d == 2) ? 1 : 2;
        }
    };
    accumulate(q.get_num(), 1);
    accumulate(q.get_den(), -1);
    for (auto it = r.exponents.begin(); it != r.exponents.end();)
        it = (it->second == 0) ? r.exponents.erase(it) : std::next(it);
    return r;
}

DiagonalLattice DiagonalLattice::build(int dim, const std::vector<Matrix>& generators) {
    DiagonalLattice lat;
    lat.dim_ = dim;

    std::vector<std::vector<RationalFactorization>> facts;
    std::set<mpz_class> prime_set;
    for (const auto& g : generators) {
        std::vector<RationalFactorization> row;
        for (int i = 0; i < dim; ++i) {
            row.push_back(factor_rational(g(i, i).rat()));
            for (const auto& [p, e] : row.back().exponents) prime_set.insert(p);
        }
        facts.push_back(std::move(row));
    }
    lat.primes_.assign(prime_set.begin(), prime_set.end());

    const int np = int(lat.primes_.size());
    lat.exp_matrix_ = ZMat(dim * np, int(generators.size()));
    for (size_t gi = 0; gi < generators.size(); ++gi) {
        Encoding enc;
        enc.signs.resize(size_t(dim), 0);
        enc.exponents.assign(size_t(dim) * np, 0);
        for (int i = 0; i < dim; ++i) {
            enc.signs[size_t(i)] = facts[gi][size_t(i)].sign;
            for (int pj = 0; pj < np; ++pj) {
                auto it = facts[gi][size_t(i)].exponents.find(lat.primes_[size_t(pj)]);
                if (it != facts[gi][size_t(i)].exponents.end()) {
                    enc.exponents[size_t(i) * np + pj] = it->second;
                    lat.exp_matrix_(i * np + pj, int(gi)) = it->second;
                }
            }
        }
        lat.gen_encodings_.push_back(std::move(enc));
    }

    auto hom = solve_integer_system(lat.exp_matrix_, ZVec(size_t(dim) * np));
    lat.kernel_ = hom ? hom->kernel : std::vector<ZVec>{};
    return lat;
}

std::optional<DiagonalLattice::Encoding> DiagonalLattice::encode(const Vec& diag) const {
    const int np = int(primes_.size());
    Encoding enc;
    enc.signs.resize(size_t(dim_), 0);
    enc.exponents.assign(size_t(dim_) * np, 0);
    for (int i = 0; i < dim_; ++i) {
        RationalFactorization f = factor_rational(diag[size_t(i)].rat());
        enc.signs[size_t(i)] = f.sign;
        for (const auto& [p, e] : f.exponents) {
            auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
            if (it == primes_.end() || *it != p) return std::nullopt;
            enc.exponents[size_t(i) * np + (it - primes_.begin())] = e;
        }
    }
    return enc;
}

std::vector<int> DiagonalLattice::signs_of_word(const ZVec& z) const {
    std::vector<int> s(size_t(dim_), 0);
    for (size_t gi = 0; gi < gen_encodings_.size(); ++gi) {
        long par = mpz_class(z[gi] % 2).get_si();
        if (par == 0) continue;
        for (int i = 0; i < dim_; ++i)
            s[size_t(i)] = (s[size_t(i)] + gen_encodings_[gi].signs[size_t(i)]) & 1;
    }
    return s;
}

std::vector<ZVec> DiagonalLattice::solve_root_words(const Encoding& target, long k) const {
    if (k < 1) throw precondition_error("solve_root_words requires k >= 1");
    // exponent part: (k*M) z = target; the kernel of k*M equals the kernel of M
    ZMat km = exp_matrix_;
    for (int i = 0; i < km.rows(); ++i)
        for (int j = 0; j < km.cols(); ++j) km(i, j) *= k;
    auto sol = solve_integer_system(km, target.exponents);
    std::vector<ZVec> words;
    if (!sol) return words;

    const int d = int(kernel_.size());
    if (d > 24)
        throw unsupported_error("sign enumeration over a relation lattice of rank > 24");
    std::set<std::vector<int>> seen_signs;
    for (long mask = 0; mask < (1L << d); ++mask) {
        ZVec z = sol->particular;
        for (int b = 0; b < d; ++b)
            if ((mask >> b) & 1)
                for (size_t i = 0; i < z.size(); ++i) z[i] += kernel_[size_t(b)][i];
        // sign condition: k * signs(z) == target sign, componentwise mod 2
        std::vector<int> sg = signs_of_word(z);
        bool ok = true;
        for (int i = 0; i < dim_ && ok; ++i) {
            int lhs = (k % 2 == 0) ? 0 : sg[size_t(i)];
            ok = (lhs == target.signs[size_t(i)]);
        }
        if (!ok) continue;
        if (seen_signs.insert(sg).second) words.push_back(std::move(z));
    }
    // deterministic order: lexicographic on the class sign vector
    std::sort(words.begin(), words.end(), [&](const ZVec& a, const ZVec& b) {
        return signs_of_word(a) < signs_of_word(b);
    });
    return words;
}

std::vector<ZVec> DiagonalLattice::relation_generators() const {
    std::vector<ZVec> gens;
    const int d = int(kernel_.size());
    const int m = int(gen_encodings_.size());
    for (const auto& kv : kernel_) {
        ZVec twice = kv;
        for (auto& x : twice) x *= 2;
        gens.push_back(std::move(twice));
    }
    if (d == 0) return gens;
    // kernel of the sign map restricted to the exponent kernel, over F_2
    Field f2 = Field::Fp(2);
    Matrix signmat(f2, dim_, d);
    for (int b = 0; b < d; ++b) {
        std::vector<int> s = signs_of_word(kernel_[size_t(b)]);
        for (int i = 0; i < dim_; ++i) signmat(i, b) = Scalar::fp(2, s[size_t(i)]);
    }
    Subspace sk = kernel_basis(signmat);
    for (const auto& eps : sk.basis()) {
        ZVec z(size_t(m), mpz_class(0));
        for (int b = 0; b < d; ++b)
            if (!eps[size_t(b)].is_zero())
                for (size_t i = 0; i < z.size(); ++i) z[i] += kernel_[size_t(b)][i];
        gens.push_back(std::move(z));
    }
    return gens;
}

bool DiagonalLattice::finite_class_group() const {
    // finite iff every generator's exponent vector is zero
    for (const auto& e : gen_encodings_)
        for (const auto& x : e.exponents)
            if (x != 0) return false;
    return true;
}

std::vector<ZVec> DiagonalLattice::enumerate_class_words() const {
    if (!finite_class_group())
        throw unsupported_error("class group is infinite (positive lattice rank)");
    const int m = int(gen_encodings_.size());
    if (m > 24) throw unsupported_error("too many generators for sign enumeration");
    std::set<std::vector<int>> seen;
    std::vector<ZVec> words;
    for (long mask = 0; mask < (1L << m); ++mask) {
        ZVec z(size_t(m), mpz_class(0));
        for (int b = 0; b < m; ++b) z[size_t(b)] = (mask >> b) & 1;
        std::vector<int> sg = signs_of_word(z);
        if (seen.insert(sg).second) words.push_back(std::move(z));
    }
    std::sort(words.begin(), words.end(), [&](const ZVec& a, const ZVec& b) {
        return signs_of_word(a) < signs_of_word(b);
    });
    return words;
}

} // namespace pkroots
