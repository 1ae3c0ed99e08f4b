#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "pkroots/oracle.hpp"

namespace pkroots {

// Per-layer fixed-space comparison for one root-class candidate.
struct LayerComparison {
    int layer = 0;
    Subspace fixed_a; // fixed space of the base class action
    Subspace fixed_b; // fixed space of the candidate action
    bool contained = false; // fixed_a subseteq fixed_b
};

struct CandidateVerdict {
    ClassKey b;
    std::vector<LayerComparison> layers;
    bool survives = false;
    // witnessing violation when the candidate fails
    int failing_layer = -1;
    Vec violating_coords;  // layer coordinates of a vector fixed by a, moved by b
    Vec violating_ambient; // the same vector on the superdiagonal
};

// The admissible subset of the root classes: candidates whose layer actions
// fix everything the base class fixes.
struct RootClassScreening {
    RootSet roots;
    std::vector<CandidateVerdict> verdicts;
    std::vector<ClassKey> admissible; // canonical order
};

// Geometric sum of inverse layer-action powers; invertible exactly when the
// candidate has no nontrivial k-th root of unity in its layer spectrum.
struct CorrectionOperator {
    ClassKey b;
    int layer = 0;
    long k = 1;
    Matrix action;
    Matrix matrix; // I + action^-1 + ... + action^-(k-1)
    Scalar det;
    std::optional<Matrix> inverse;
};

struct SpectralVerdict {
    ClassKey b;
    std::vector<CorrectionOperator> layers;
    bool survives = false;
};

struct SpectralScreening {
    RootSet roots;
    std::vector<SpectralVerdict> verdicts;
    std::vector<ClassKey> admissible;
};

enum class QueryMode { Coset, Element };

struct ObstructionRecord {
    ClassKey b;
    int layer = 0;
    Vec fixed_coords;  // layer coordinates of v in F(a) \ F(b)
    Vec fixed_ambient; // superdiagonal coordinates of v
};

// Self-contained decision record; every field is recheckable from the group
// context alone, and the operation verifies its own output before returning.
struct Certificate {
    Matrix x;
    long k = 1;
    QueryMode mode = QueryMode::Coset;
    bool decision = false;
    ClassKey base;
    RootClassScreening screening;
    std::optional<ClassKey> witness;
    std::optional<Matrix> root; // y with y^k = x and class(y) = witness
    std::vector<CorrectionOperator> witness_corrections;
    std::vector<ObstructionRecord> obstructions;
    bool roots_empty = false;
    std::vector<std::string> transcript;
};

struct RegularityReport {
    ClassKey cls;
    long k = 1;
    std::vector<int> layer_index;
    std::vector<Poly> charpolys; // per layer
    std::vector<Poly> gcds;      // per layer, against 1 + x + ... + x^(k-1)
    bool regular = true;
};

// The minimal subspace U with the base class trivial and the candidate
// fixed-point-free on the quotient; bounds which layer vectors roots over a
// mismatched class can reach.
struct ObstructionSubspace {
    int layer = 0;
    ClassKey b;
    long k = 1;
    Subspace im_correction;
    Subspace im_a_minus_i;
    Subspace fix_b_quotient_lift;
    Subspace subspace;
};

struct SurjectivityReport {
    long k = 1;
    bool surjective = true;
    std::optional<ClassKey> first_failing;
    std::vector<std::pair<ClassKey, bool>> per_class;
};

enum class ProbeResult { InImage, NotInImage, Unsupported };

// Decision procedures bound to one context, one central series and one
// quotient model. All operations are pure and deterministic.
class RootsEngine {
public:
    RootsEngine(const TriangularGroup& ctx, SeriesStrategy strategy);

    const TriangularGroup& ctx() const { return *ctx_; }
    const CentralSeries& series() const { return series_; }
    const AbelianQuotient& quotient() const { return quotient_; }

    // Layer action of a class (depends only on the coset), cached.
    const Matrix& layer_action_of(const ClassKey& b, int layer) const;
    Subspace layer_fixed_space(const ClassKey& b, int layer) const;

    RootClassScreening screen_root_classes(const Matrix& x, long k) const;
    SpectralScreening screen_root_classes_spectral(const Matrix& x, long k) const;
    CorrectionOperator correction_operator(const ClassKey& b, int layer, long k) const;

    Certificate coset_root_decision(const Matrix& x, long k) const;

    // Exact y with y^k = x*n and class(y) = b; requires an admissible b.
    Matrix construct_root(const Matrix& x, const Matrix& n, const ClassKey& b, long k) const;

    // Unique w with (action(x)^-1 - I) w = v on the layer; requires a trivial fixed
    // space on the layer.
    Vec fixed_point_conjugator(const Matrix& x, const Vec& v, int layer) const;

    ObstructionSubspace obstruction_subspace(const Matrix& x, const ClassKey& b, int layer, long k) const;

    RegularityReport pk_regularity(const Matrix& g, long k) const;

    SurjectivityReport group_pk_surjective(long k) const;

    // Enumeration-backed centralizer and center procedures (finite mode).
    bool center_pk_surjective(const EnumeratedGroup& e, long k) const;
    std::optional<Matrix> center_of_centralizer_root(const EnumeratedGroup& e, const Matrix& x,
                                                     long k) const;

    // Element-level membership x in P_k(G) per k. Finite mode consults the
    // enumeration; characteristic 0 decides via the coset criterion plus
    // explicit layer solves, marking genuinely undecided cases.
    std::map<long, ProbeResult> multi_k_probe(const Matrix& x, const std::vector<long>& ks,
                                              const EnumeratedGroup* e) const;

    // k >= 1 and coprime to the characteristic; x in the group.
    void require_admissible(const Matrix& x, long k) const;

private:
    std::optional<Matrix> try_layer_descent(const Matrix& target, const ClassKey& b, long k,
                                            bool require_invertible) const;

    const TriangularGroup* ctx_;
    CentralSeries series_;
    AbelianQuotient quotient_;
    mutable std::unique_ptr<std::mutex> cache_mutex_;
    mutable std::map<std::pair<std::string, int>, Matrix> action_cache_;
};

} // namespace pkroots
