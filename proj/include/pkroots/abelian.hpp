#pragma once

#include "pkroots/diag_lattice.hpp"
#include "pkroots/group_ctx.hpp"

namespace pkroots {

// A class of the abelian quotient A = G/N, keyed by the diagonal vector.
struct ClassKey {
    Vec diag;

    bool operator==(const ClassKey& o) const { return diag == o.diag; }
    bool operator<(const ClassKey& o) const; // lexicographic, canonical
    std::string str() const;
    bool is_trivial() const;
};

// The complete set B = {b in A : b^k = a}, deterministically ordered.
struct RootSet {
    ClassKey base;
    long k = 1;
    std::vector<ClassKey> roots;
    // lattice mode: one representative generator word per root, aligned with
    // `roots`; finite mode leaves this empty
    std::vector<ZVec> words;
    bool empty() const { return roots.empty(); }
};

// Concrete model of A = G/N: enumerated diagonal classes for finite fields,
// signed prime-exponent coordinates over Q.
class AbelianQuotient {
public:
    enum class Mode { Finite, Lattice };

    static AbelianQuotient build(const TriangularGroup& ctx);

    Mode mode() const { return mode_; }
    const TriangularGroup& ctx() const { return *ctx_; }

    ClassKey project(const Matrix& g) const;

    // All classes (finite mode, or lattice mode with a finite class group),
    // canonical order.
    std::vector<ClassKey> all_classes() const;
    long size() const; // finite mode only

    RootSet kth_root_classes(const ClassKey& a, long k) const;

    // Deterministic representative with project(result) = b.
    Matrix lift_class(const ClassKey& b) const;

    // Lattice-mode internals, exposed for certificates.
    const DiagonalLattice& lattice() const;

private:
    AbelianQuotient() = default;

    Matrix lift_word(const ZVec& z) const;

    const TriangularGroup* ctx_ = nullptr;
    Mode mode_ = Mode::Finite;
    // finite mode
    std::vector<ClassKey> classes_;         // sorted canonical order
    std::vector<Matrix> representatives_;   // aligned with classes_
    // lattice mode
    std::unique_ptr<DiagonalLattice> lattice_;
};

} // namespace pkroots
