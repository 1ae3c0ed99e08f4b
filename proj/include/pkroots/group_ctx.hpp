#pragma once

#include <map>
#include <memory>
#include <unordered_map>

#include "pkroots/linalg.hpp"
#include "pkroots/poly.hpp"

namespace pkroots {

// Raw group description as read from a spec file.
struct GroupSpec {
    Field field = Field::Q();
    int dim = 0;
    std::vector<Matrix> generators;
    // Characteristic 0 only: basis of the Lie algebra of the unipotent part
    // (strictly upper-triangular matrices). May be empty for trivial N.
    std::vector<Matrix> lie_algebra;
    long enumeration_cap = 1000000;
    std::string name;
};

enum class SeriesStrategy { Superdiagonal, Refined };

std::string strategy_name(SeriesStrategy s);
SeriesStrategy strategy_from_name(const std::string& s);

class TriangularGroup;

// One layer of a central series of N. The layer lives on a single
// superdiagonal: elements of the series member project to `full`, the next
// member projects to `modulus`, and `rep` is the canonical complement that
// carries the layer coordinates.
struct SeriesLayer {
    int superdiag = 1;  // 1-based distance above the main diagonal
    Subspace rep;       // coordinates of the layer quotient
    Subspace modulus;   // quotiented-out image
    Subspace full;      // modulus + rep
};

// Central series N = N_0 > N_1 > ... > N_r = {e} with vector-space layer
// quotients, conjugation-invariant members, and exact coordinate maps.
class CentralSeries {
public:
    CentralSeries(const TriangularGroup& ctx, SeriesStrategy strategy);

    SeriesStrategy strategy() const { return strategy_; }
    int length() const { return int(layers_.size()); } // r
    const SeriesLayer& layer(int j) const;             // j in [0, r)

    // True iff u lies in the series member N_level, level in [0, r].
    bool member_of_level(int level, const Matrix& u) const;

    // Coordinates of u in layer j; requires u in N_level(j).
    Vec layer_coords(int j, const Matrix& u) const;

    // Element of N_level(j) whose layer-j coordinates equal `coords`.
    Matrix lift_from_layer(int j, const Vec& coords) const;

    // Matrix of v -> coords(g * lift(v) * g^-1) on layer j. Depends only on
    // the coset gN.
    Matrix layer_action(const Matrix& g, int j) const;

    // Fixed vectors of the layer action, ker(action - I), in layer coordinates.
    Subspace fixed_subspace(const Matrix& g, int j) const;

private:
    void build_superdiagonal();
    void refine_layers();
    void validate() const;

    const TriangularGroup* ctx_;
    SeriesStrategy strategy_;
    std::vector<SeriesLayer> layers_;
};

// Validated group context: invertible upper-triangular generators over an
// exact field, the unipotent part N, and the abelian diagonal quotient.
class TriangularGroup {
public:
    static TriangularGroup validate(GroupSpec spec);

    const GroupSpec& spec() const { return spec_; }
    const Field& field() const { return spec_.field; }
    int dim() const { return spec_.dim; }
    const std::vector<Matrix>& generators() const { return spec_.generators; }
    bool finite_mode() const { return !spec_.field.is_rational(); }

    // Diagonal entry vector; constant exactly on N-cosets.
    Vec diag_class(const Matrix& g) const;

    // Membership in the unipotent part N.
    bool unipotent_membership(const Matrix& m) const;

    // Membership in G itself.
    bool contains(const Matrix& g) const;

    // Finite mode: the enumerated element list of G (deterministic order).
    const std::vector<Matrix>& elements() const;
    // Finite mode: the enumerated elements of N, in enumeration order.
    const std::vector<Matrix>& unipotent_elements() const;

    // Characteristic 0: the Lie span of N in strict-upper coordinates.
    const Subspace& lie_span() const;
    const std::vector<Matrix>& lie_basis() const { return spec_.lie_algebra; }

    // Exact terminating series; requires char 0 or p > n.
    Matrix exp_nilpotent(const Matrix& x) const;
    Matrix log_unipotent(const Matrix& u) const;

    CentralSeries central_series(SeriesStrategy strategy) const {
        return CentralSeries(*this, strategy);
    }

    // Strictly-upper coordinate bookkeeping (row-major position order).
    int strict_positions() const { return dim() * (dim() - 1) / 2; }
    Vec to_strict_coords(const Matrix& m) const;     // entries above the diagonal
    Matrix from_strict_coords(const Vec& v) const;   // I + those entries
    std::vector<std::pair<int, int>> strict_position_list() const;

    // Positions where elements of N may be nonzero, row-major; drives the
    // n(...) element syntax.
    const std::vector<std::pair<int, int>>& unipotent_support() const { return support_; }
    // Element of N with the given support-coordinate values (checked).
    Matrix unipotent_from_support(const Vec& values) const;

    // Superdiagonal-d entries of u - I as a vector of length dim - d.
    Vec superdiag_of(const Matrix& u, int d) const;

    // Image of {u in N : superdiags < j vanish} on superdiagonal j.
    Subspace superdiag_layer_space(int j) const;

    // Element of N with vanishing superdiagonals < j and superdiagonal j
    // equal to v; requires v in superdiag_layer_space(j).
    Matrix lift_superdiag(int j, const Vec& v) const;

private:
    TriangularGroup() = default;

    void enumerate_finite();
    void validate_char0();
    void compute_support();
    void prepare_superdiag_lifts() const;

    GroupSpec spec_;
    // finite mode
    std::vector<Matrix> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<Matrix> unipotent_;
    // char 0
    Subspace lie_span_;
    std::vector<std::pair<int, int>> support_;
    // cached layer spaces and basis lifts per superdiagonal
    mutable std::vector<Subspace> layer_space_cache_;
    mutable std::vector<std::vector<Matrix>> basis_lift_cache_;
    mutable bool lifts_ready_ = false;
};

} // namespace pkroots
