#include "pkroots/group_ctx.hpp"

#include <algorithm>

#include "pkroots/diag_lattice.hpp"

namespace pkroots {

std::string strategy_name(SeriesStrategy s) {
    return s == SeriesStrategy::Superdiagonal ? "superdiag" : "refined";
}

SeriesStrategy strategy_from_name(const std::string& s) {
    if (s == "superdiag" || s == "superdiagonal") return SeriesStrategy::Superdiagonal;
    if (s == "refined") return SeriesStrategy::Refined;
    throw validation_error("unknown central-series strategy: " + s);
}

// ---------------------------------------------------------------------------
// TriangularGroup
// ---------------------------------------------------------------------------

TriangularGroup TriangularGroup::validate(GroupSpec spec) {
    TriangularGroup g;
    const int n = spec.dim;
    if (n < 1) throw validation_error("dimension must be positive");
    for (size_t i = 0; i < spec.generators.size(); ++i) {
        const Matrix& m = spec.generators[i];
        if (m.rows() != n || m.cols() != n)
            throw validation_error("generator " + std::to_string(i + 1) + " is not " +
                                   std::to_string(n) + "x" + std::to_string(n));
        if (m.field() != spec.field)
            throw validation_error("generator " + std::to_string(i + 1) + " has wrong field");
        if (!m.is_upper_triangular())
            throw validation_error("generator " + std::to_string(i + 1) + " is not upper-triangular");
        for (int d = 0; d < n; ++d)
            if (m(d, d).is_zero())
                throw validation_error("generator " + std::to_string(i + 1) + " is singular");
    }
    if (spec.field.is_rational()) {
        for (size_t i = 0; i < spec.lie_algebra.size(); ++i) {
            const Matrix& x = spec.lie_algebra[i];
            if (x.rows() != n || x.cols() != n || x.field() != spec.field)
                throw validation_error("lie_algebra element " + std::to_string(i + 1) + " has wrong shape or field");
            if (!x.is_strictly_upper())
                throw validation_error("lie_algebra element " + std::to_string(i + 1) +
                                       " is not strictly upper-triangular");
        }
    } else if (!spec.lie_algebra.empty()) {
        throw validation_error("lie_algebra is only meaningful in characteristic 0");
    }
    g.spec_ = std::move(spec);
    if (g.finite_mode())
        g.enumerate_finite();
    else
        g.validate_char0();
    g.compute_support();
    g.prepare_superdiag_lifts(); // immutable and shareable from here on
    return g;
}

void TriangularGroup::enumerate_finite() {
    const Field& f = field();
    Matrix id = Matrix::identity(f, dim());
    elements_.push_back(id);
    index_.emplace(id.canonical_key(), 0);
    for (size_t head = 0; head < elements_.size(); ++head) {
        Matrix cur = elements_[head];
        for (const Matrix& gen : spec_.generators) {
            Matrix next = cur * gen;
            std::string key = next.canonical_key();
            if (index_.count(key)) continue;
            if (long(elements_.size()) >= spec_.enumeration_cap)
                throw validation_error("group closure exceeds enumeration cap " +
                                       std::to_string(spec_.enumeration_cap));
            index_.emplace(std::move(key), int(elements_.size()));
            elements_.push_back(std::move(next));
        }
    }
    for (const Matrix& m : elements_)
        if (m.is_unitriangular()) unipotent_.push_back(m);
}

void TriangularGroup::validate_char0() {
    std::vector<Vec> coords;
    for (const auto& x : spec_.lie_algebra) coords.push_back(to_strict_coords(x));
    lie_span_ = Subspace::from_span(field(), strict_positions(), coords);

    // bracket closure
    for (size_t i = 0; i < spec_.lie_algebra.size(); ++i)
        for (size_t j = i + 1; j < spec_.lie_algebra.size(); ++j) {
            const Matrix &x = spec_.lie_algebra[i], &y = spec_.lie_algebra[j];
            Matrix br = x * y - y * x;
            if (!lie_span_.contains(to_strict_coords(br)))
                throw validation_error("lie_algebra is not closed under brackets (elements " +
                                       std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        }

    // conjugation invariance by every generator
    for (size_t gi = 0; gi < spec_.generators.size(); ++gi) {
        const Matrix& g = spec_.generators[gi];
        Matrix ginv = *inverse(g);
        for (size_t i = 0; i < spec_.lie_algebra.size(); ++i) {
            Matrix conj = g * spec_.lie_algebra[i] * ginv;
            if (!lie_span_.contains(to_strict_coords(conj)))
                throw validation_error("lie_algebra is not invariant under conjugation by generator " +
                                       std::to_string(gi + 1));
        }
    }

    // Every unipotent element of the generated group must lie in N. It
    // suffices that generator-pair commutators and the diagonal relation
    // words do.
    for (size_t i = 0; i < spec_.generators.size(); ++i)
        for (size_t j = i + 1; j < spec_.generators.size(); ++j) {
            const Matrix &a = spec_.generators[i], &b = spec_.generators[j];
            Matrix comm = a * b * *inverse(a) * *inverse(b);
            if (!unipotent_membership(comm))
                throw validation_error("commutator of generators " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " lies outside the unipotent part");
        }
    DiagonalLattice lat = DiagonalLattice::build(dim(), spec_.generators);
    for (const ZVec& z : lat.relation_generators()) {
        Matrix w = Matrix::identity(field(), dim());
        for (size_t i = 0; i < z.size(); ++i) {
            if (z[i] == 0) continue;
            if (!z[i].fits_slong_p())
                throw unsupported_error("diagonal relation exponent too large");
            w = w * spec_.generators[i].pow(z[i].get_si());
        }
        if (!unipotent_membership(w))
            throw validation_error("diagonal relation word lies outside the unipotent part; "
                                   "the quotient by N is not faithfully represented by diagonals");
    }
}

void TriangularGroup::compute_support() {
    std::vector<std::vector<bool>> hit(size_t(dim()), std::vector<bool>(size_t(dim()), false));
    if (finite_mode()) {
        for (const Matrix& u : unipotent_)
            for (int i = 0; i < dim(); ++i)
                for (int j = i + 1; j < dim(); ++j)
                    if (!u(i, j).is_zero()) hit[size_t(i)][size_t(j)] = true;
    } else {
        for (const Matrix& x : spec_.lie_algebra)
            for (int i = 0; i < dim(); ++i)
                for (int j = i + 1; j < dim(); ++j)
                    if (!x(i, j).is_zero()) hit[size_t(i)][size_t(j)] = true;
    }
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            if (hit[size_t(i)][size_t(j)]) support_.emplace_back(i, j);
}

Vec TriangularGroup::diag_class(const Matrix& g) const {
    if (g.rows() != dim() || g.cols() != dim())
        throw precondition_error("diag_class: wrong shape");
    return g.diag();
}

bool TriangularGroup::unipotent_membership(const Matrix& m) const {
    if (m.rows() != dim() || m.cols() != dim() || m.field() != field()) return false;
    if (!m.is_unitriangular()) return false;
    if (finite_mode()) return index_.count(m.canonical_key()) > 0;
    return lie_span_.dim() == 0 ? m.is_identity()
                                : lie_span_.contains(to_strict_coords(log_unipotent(m)));
}

bool TriangularGroup::contains(const Matrix& g) const {
    if (g.rows() != dim() || g.cols() != dim() || g.field() != field()) return false;
    if (finite_mode()) return index_.count(g.canonical_key()) > 0;
    if (!g.is_upper_triangular()) return false;
    for (int i = 0; i < dim(); ++i)
        if (g(i, i).is_zero()) return false;
    DiagonalLattice lat = DiagonalLattice::build(dim(), spec_.generators);
    auto enc = lat.encode(diag_class(g));
    if (!enc) return false;
    auto words = lat.solve_root_words(*enc, 1);
    if (words.empty()) return false;
    Matrix w = Matrix::identity(field(), dim());
    for (size_t i = 0; i < words[0].size(); ++i)
        if (words[0][i] != 0) w = w * spec_.generators[i].pow(words[0][i].get_si());
    return unipotent_membership(*inverse(w) * g);
}

const std::vector<Matrix>& TriangularGroup::elements() const {
    if (!finite_mode()) throw unsupported_error("element enumeration requires finite mode");
    return elements_;
}

const std::vector<Matrix>& TriangularGroup::unipotent_elements() const {
    if (!finite_mode()) throw unsupported_error("unipotent enumeration requires finite mode");
    return unipotent_;
}

const Subspace& TriangularGroup::lie_span() const {
    if (finite_mode()) throw unsupported_error("lie_span requires characteristic 0");
    return lie_span_;
}

Matrix TriangularGroup::exp_nilpotent(const Matrix& x) const {
    if (!x.is_strictly_upper())
        throw precondition_error("exp_nilpotent: input is not strictly upper-triangular");
    const Field& f = field();
    const int n = dim();
    if (!f.is_rational() && f.p <= n)
        throw unsupported_error("exp/log undefined for characteristic p <= n");
    Matrix acc = Matrix::identity(f, n);
    Matrix pw = Matrix::identity(f, n);
    Scalar fact = Scalar::one(f);
    for (int m = 1; m < n; ++m) {
        pw = pw * x;
        fact = fact * Scalar::of_int(f, m);
        acc = acc + pw.scaled(*fact.inverse());
    }
    return acc;
}

Matrix TriangularGroup::log_unipotent(const Matrix& u) const {
    if (!u.is_unitriangular())
        throw precondition_error("log_unipotent: input is not unitriangular");
    const Field& f = field();
    const int n = dim();
    if (!f.is_rational() && f.p <= n)
        throw unsupported_error("exp/log undefined for characteristic p <= n");
    Matrix e = u - Matrix::identity(f, n);
    Matrix acc(f, n, n);
    Matrix pw = Matrix::identity(f, n);
    for (int m = 1; m < n; ++m) {
        pw = pw * e;
        Scalar c = *Scalar::of_int(f, m).inverse();
        if (m % 2 == 0) c = -c;
        acc = acc + pw.scaled(c);
    }
    return acc;
}

std::vector<std::pair<int, int>> TriangularGroup::strict_position_list() const {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j) pos.emplace_back(i, j);
    return pos;
}

Vec TriangularGroup::to_strict_coords(const Matrix& m) const {
    Vec v;
    v.reserve(size_t(strict_positions()));
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j) v.push_back(m(i, j));
    return v;
}

Matrix TriangularGroup::from_strict_coords(const Vec& v) const {
    Matrix m = Matrix::identity(field(), dim());
    size_t k = 0;
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j) m(i, j) = v[k++];
    return m;
}

Matrix TriangularGroup::unipotent_from_support(const Vec& values) const {
    if (values.size() != support_.size())
        throw validation_error("n(...) expects " + std::to_string(support_.size()) +
                               " coordinates for this group");
    Matrix m = Matrix::identity(field(), dim());
    for (size_t i = 0; i < support_.size(); ++i)
        m(support_[i].first, support_[i].second) = values[i];
    if (!unipotent_membership(m))
        throw validation_error("n(...) coordinates do not describe an element of the unipotent part");
    return m;
}

Vec TriangularGroup::superdiag_of(const Matrix& u, int d) const {
    Vec v;
    v.reserve(size_t(dim() - d));
    for (int i = 0; i + d < dim(); ++i) v.push_back(u(i, i + d));
    return v;
}

void TriangularGroup::prepare_superdiag_lifts() const {
    if (lifts_ready_) return;
    const int n = dim();
    layer_space_cache_.assign(size_t(n), Subspace());
    basis_lift_cache_.assign(size_t(n), {});
    for (int j = 1; j < n; ++j) {
        const int amb = n - j;
        std::vector<Vec> img;
        if (finite_mode()) {
            for (const Matrix& u : unipotent_) {
                bool low_zero = true;
                for (int d = 1; d < j && low_zero; ++d)
                    low_zero = vec_is_zero(superdiag_of(u, d));
                if (low_zero) img.push_back(superdiag_of(u, j));
            }
        } else {
            // coefficient vectors of Lie elements vanishing below superdiag j
            const int nb = int(spec_.lie_algebra.size());
            int low_rows = 0;
            for (int d = 1; d < j; ++d) low_rows += n - d;
            Matrix constr(field(), low_rows, nb);
            int r = 0;
            for (int d = 1; d < j; ++d)
                for (int i = 0; i + d < n; ++i, ++r)
                    for (int b = 0; b < nb; ++b)
                        constr(r, b) = spec_.lie_algebra[size_t(b)](i, i + d);
            Subspace ker = kernel_basis(constr);
            for (const auto& c : ker.basis()) {
                Vec w = vec_zero(field(), amb);
                for (int b = 0; b < nb; ++b)
                    if (!c[size_t(b)].is_zero()) {
                        Vec contrib = superdiag_of(spec_.lie_algebra[size_t(b)], j);
                        w = vec_add(w, vec_scale(c[size_t(b)], contrib));
                    }
                img.push_back(std::move(w));
            }
        }
        Subspace space = Subspace::from_span(field(), amb, img);
        // one lift per basis vector of the layer space
        std::vector<Matrix> lifts;
        for (const auto& beta : space.basis()) {
            if (finite_mode()) {
                bool found = false;
                for (const Matrix& u : unipotent_) {
                    bool low_zero = true;
                    for (int d = 1; d < j && low_zero; ++d)
                        low_zero = vec_is_zero(superdiag_of(u, d));
                    if (low_zero && superdiag_of(u, j) == beta) {
                        lifts.push_back(u);
                        found = true;
                        break;
                    }
                }
                if (!found) throw internal_error("no unipotent lift for a layer basis vector");
            } else {
                // Lie element with zero low superdiagonals and prescribed
                // superdiagonal j, free coefficients set to zero
                const int nb = int(spec_.lie_algebra.size());
                int low_rows = 0;
                for (int d = 1; d < j; ++d) low_rows += n - d;
                Matrix sys(field(), low_rows + amb, nb);
                Vec rhs = vec_zero(field(), low_rows + amb);
                int r = 0;
                for (int d = 1; d < j; ++d)
                    for (int i = 0; i + d < n; ++i, ++r)
                        for (int b = 0; b < nb; ++b)
                            sys(r, b) = spec_.lie_algebra[size_t(b)](i, i + d);
                for (int i = 0; i + j < n; ++i, ++r) {
                    for (int b = 0; b < nb; ++b)
                        sys(r, b) = spec_.lie_algebra[size_t(b)](i, i + j);
                    rhs[size_t(r)] = beta[size_t(i)];
                }
                auto c = solve_linear(sys, rhs);
                if (!c) throw internal_error("no Lie lift for a layer basis vector");
                Matrix x(field(), n, n);
                for (int b = 0; b < nb; ++b)
                    if (!(*c)[size_t(b)].is_zero())
                        x = x + spec_.lie_algebra[size_t(b)].scaled((*c)[size_t(b)]);
                lifts.push_back(std::move(x)); // stored as Lie element
            }
        }
        layer_space_cache_[size_t(j)] = std::move(space);
        basis_lift_cache_[size_t(j)] = std::move(lifts);
    }
    lifts_ready_ = true;
}

Subspace TriangularGroup::superdiag_layer_space(int j) const {
    if (j < 1 || j >= dim()) throw precondition_error("superdiag_layer_space: bad superdiagonal");
    prepare_superdiag_lifts();
    return layer_space_cache_[size_t(j)];
}

Matrix TriangularGroup::lift_superdiag(int j, const Vec& v) const {
    prepare_superdiag_lifts();
    const Subspace& space = layer_space_cache_[size_t(j)];
    Vec coords = space.coords_of(v);
    if (finite_mode()) {
        Matrix u = Matrix::identity(field(), dim());
        for (size_t i = 0; i < coords.size(); ++i) {
            long e = coords[i].residue();
            if (e) u = u * basis_lift_cache_[size_t(j)][i].pow(e);
        }
        return u;
    }
    Matrix x(field(), dim(), dim());
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero())
            x = x + basis_lift_cache_[size_t(j)][i].scaled(coords[i]);
    return exp_nilpotent(x);
}

// ---------------------------------------------------------------------------
// CentralSeries
// ---------------------------------------------------------------------------

CentralSeries::CentralSeries(const TriangularGroup& ctx, SeriesStrategy strategy)
    : ctx_(&ctx), strategy_(strategy) {
    build_superdiagonal();
    if (strategy_ == SeriesStrategy::Refined) refine_layers();
    validate();
}

void CentralSeries::build_superdiagonal() {
    for (int j = 1; j < ctx_->dim(); ++j) {
        Subspace space = ctx_->superdiag_layer_space(j);
        if (space.dim() == 0) continue;
        SeriesLayer layer;
        layer.superdiag = j;
        layer.full = space;
        layer.modulus = Subspace::zero(ctx_->field(), space.ambient());
        layer.rep = space;
        layers_.push_back(std::move(layer));
    }
}

const SeriesLayer& CentralSeries::layer(int j) const {
    if (j < 0 || j >= length()) throw precondition_error("layer index out of range");
    return layers_[size_t(j)];
}

bool CentralSeries::member_of_level(int level, const Matrix& u) const {
    if (level < 0 || level > length()) throw precondition_error("level out of range");
    if (!ctx_->unipotent_membership(u)) return false;
    if (level == length()) return u.is_identity();
    const SeriesLayer& lay = layers_[size_t(level)];
    for (int d = 1; d < lay.superdiag; ++d)
        if (!vec_is_zero(ctx_->superdiag_of(u, d))) return false;
    return lay.full.contains(ctx_->superdiag_of(u, lay.superdiag));
}

Vec CentralSeries::layer_coords(int j, const Matrix& u) const {
    const SeriesLayer& lay = layer(j);
    for (int d = 1; d < lay.superdiag; ++d)
        if (!vec_is_zero(ctx_->superdiag_of(u, d)))
            throw internal_error("layer_coords: element outside the series member (low superdiagonal)");
    Vec v = ctx_->superdiag_of(u, lay.superdiag);
    if (!lay.full.contains(v))
        throw internal_error("layer_coords: element outside the series member (layer image)");
    return lay.rep.coords_of(lay.modulus.reduce(v));
}

Matrix CentralSeries::lift_from_layer(int j, const Vec& coords) const {
    const SeriesLayer& lay = layer(j);
    return ctx_->lift_superdiag(lay.superdiag, lay.rep.from_coords(coords));
}

Matrix CentralSeries::layer_action(const Matrix& g, int j) const {
    const SeriesLayer& lay = layer(j);
    const int d = lay.rep.dim();
    Matrix ginv_m = *inverse(g);
    Matrix action(ctx_->field(), d, d);
    for (int c = 0; c < d; ++c) {
        Vec unit = vec_zero(ctx_->field(), d);
        unit[size_t(c)] = Scalar::one(ctx_->field());
        Matrix lifted = lift_from_layer(j, unit);
        Vec col = layer_coords(j, g * lifted * ginv_m);
        for (int r = 0; r < d; ++r) action(r, c) = col[size_t(r)];
    }
    return action;
}

Subspace CentralSeries::fixed_subspace(const Matrix& g, int j) const {
    Matrix action = layer_action(g, j);
    return kernel_basis(action - Matrix::identity(ctx_->field(), action.rows()));
}

namespace {

// Proper invariant subspace of the quotient full/W under the commuting
// operators, expressed in ambient coordinates; nullopt when none is found.
std::optional<Subspace> invariant_between(const Field& f, const std::vector<Matrix>& ops,
                                          const Subspace& big, const Subspace& small) {
    const int q = big.dim() - small.dim();
    if (q <= 1) return std::nullopt;
    Subspace rep = big.complement_of(small);
    auto project = [&](const Vec& v) { return rep.coords_of(small.reduce(v)); };
    std::vector<Matrix> induced;
    for (const Matrix& op : ops) {
        Matrix m(f, q, q);
        for (int c = 0; c < q; ++c) {
            Vec col = project(op.apply(rep.basis()[size_t(c)]));
            for (int r = 0; r < q; ++r) m(r, c) = col[size_t(r)];
        }
        induced.push_back(std::move(m));
    }
    bool all_scalar = true;
    for (const Matrix& m : induced) {
        for (int i = 0; i < q && all_scalar; ++i)
            for (int j = 0; j < q && all_scalar; ++j)
                if (i != j ? !m(i, j).is_zero() : m(i, j) != m(0, 0)) all_scalar = false;
        if (!all_scalar) break;
    }
    if (all_scalar) {
        // every subspace is invariant; drop the last canonical basis vector
        std::vector<Vec> span = small.basis();
        for (int i = 0; i + 1 < q; ++i) span.push_back(rep.basis()[size_t(i)]);
        return Subspace::from_span(f, big.ambient(), span);
    }
    for (const Matrix& m : induced) {
        auto roots = roots_in_field(char_poly(m));
        if (!roots) continue;
        for (const Scalar& lam : *roots) {
            Matrix shifted = m - Matrix::identity(f, q).scaled(lam);
            Subspace eig = kernel_basis(shifted);
            if (eig.dim() == 0 || eig.dim() == q) continue;
            // invariance under the commuting family; verify exactly
            bool inv = true;
            for (const Matrix& other : induced) {
                for (const auto& b : eig.basis())
                    if (!eig.contains(other.apply(b))) { inv = false; break; }
                if (!inv) break;
            }
            if (!inv) continue;
            std::vector<Vec> span = small.basis();
            for (const auto& b : eig.basis()) {
                Vec amb = rep.from_coords(b);
                span.push_back(amb);
            }
            return Subspace::from_span(f, big.ambient(), span);
        }
    }
    return std::nullopt;
}

void chain_between(const Field& f, const std::vector<Matrix>& ops, const Subspace& big,
                   const Subspace& small, std::vector<Subspace>& out) {
    auto mid = invariant_between(f, ops, big, small);
    if (!mid) return;
    chain_between(f, ops, big, *mid, out);
    out.push_back(*mid);
    chain_between(f, ops, *mid, small, out);
}

} // namespace

void CentralSeries::refine_layers() {
    std::vector<SeriesLayer> refined;
    const Field& f = ctx_->field();
    for (const SeriesLayer& lay : layers_) {
        const int d = lay.rep.dim();
        std::vector<Matrix> ops;
        for (const Matrix& g : ctx_->generators()) {
            ops.push_back(layer_action(g, int(&lay - layers_.data())));
        }
        Subspace top = Subspace::full(f, d);
        Subspace bottom = Subspace::zero(f, d);
        std::vector<Subspace> mids;
        chain_between(f, ops, top, bottom, mids);
        if (mids.empty()) {
            refined.push_back(lay);
            continue;
        }
        // map layer-coordinate subspaces back to the ambient superdiagonal space
        auto to_ambient = [&](const Subspace& s) {
            std::vector<Vec> span = lay.modulus.basis();
            for (const auto& b : s.basis()) span.push_back(lay.rep.from_coords(b));
            return Subspace::from_span(f, lay.full.ambient(), span);
        };
        std::vector<Subspace> chain;
        chain.push_back(lay.full);
        for (const auto& s : mids) chain.push_back(to_ambient(s));
        chain.push_back(lay.modulus);
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            SeriesLayer sub;
            sub.superdiag = lay.superdiag;
            sub.full = chain[i];
            sub.modulus = chain[i + 1];
            sub.rep = chain[i].complement_of(chain[i + 1]);
            refined.push_back(std::move(sub));
        }
    }
    layers_ = std::move(refined);
}

void CentralSeries::validate() const {
    const Field& f = ctx_->field();
    // chain consistency within each superdiagonal
    for (size_t i = 0; i + 1 < layers_.size(); ++i) {
        if (layers_[i].superdiag == layers_[i + 1].superdiag) {
            if (!(layers_[i].modulus == layers_[i + 1].full))
                throw internal_error("central series: inconsistent chain");
        } else if (layers_[i].modulus.dim() != 0) {
            throw internal_error("central series: dangling modulus at a superdiagonal switch");
        }
    }
    if (!layers_.empty() && layers_.back().modulus.dim() != 0)
        throw internal_error("central series: does not terminate at the identity");

    // homomorphism property on generator pairs, per layer
    const auto& gens = ctx_->generators();
    for (int j = 0; j < length(); ++j) {
        std::vector<Matrix> sig;
        for (const auto& g : gens) sig.push_back(layer_action(g, j));
        for (size_t a = 0; a < gens.size(); ++a)
            for (size_t b = 0; b < gens.size(); ++b) {
                Matrix lhs = layer_action(gens[a] * gens[b], j);
                if (lhs != sig[a] * sig[b])
                    throw internal_error("layer action is not a homomorphism on layer " + std::to_string(j));
            }
    }

    // N acts trivially on every layer; centrality pushes commutators one
    // level down. Spot-checked on unipotent sample elements.
    std::vector<Matrix> nsample;
    if (ctx_->finite_mode()) {
        const auto& uni = ctx_->unipotent_elements();
        for (size_t i = 0; i < uni.size() && nsample.size() < 6; i += (uni.size() / 5 + 1))
            nsample.push_back(uni[i]);
    } else {
        for (const auto& x : ctx_->lie_basis()) nsample.push_back(ctx_->exp_nilpotent(x));
    }
    for (const Matrix& nel : nsample) {
        for (int j = 0; j < length(); ++j) {
            Matrix action = layer_action(nel, j);
            if (!action.is_identity())
                throw internal_error("unipotent element acts nontrivially on layer " + std::to_string(j));
            const int d = layers_[size_t(j)].rep.dim();
            for (int c = 0; c < d; ++c) {
                Vec unit = vec_zero(f, d);
                unit[size_t(c)] = Scalar::one(f);
                Matrix m = lift_from_layer(j, unit);
                Matrix comm = nel * m * *inverse(nel) * *inverse(m);
                if (!member_of_level(j + 1, comm))
                    throw internal_error("centrality fails at layer " + std::to_string(j));
            }
        }
    }
}

} // namespace pkroots
