#include "pkroots/roots.hpp"

namespace pkroots {

RootsEngine::RootsEngine(const TriangularGroup& ctx, SeriesStrategy strategy)
    : ctx_(&ctx), series_(ctx, strategy), quotient_(AbelianQuotient::build(ctx)),
      cache_mutex_(std::make_unique<std::mutex>()) {}

void RootsEngine::require_admissible(const Matrix& x, long k) const {
    if (k < 1) throw precondition_error("k must be a positive integer");
    long p = ctx_->field().characteristic();
    if (p != 0 && k % p == 0)
        throw precondition_error("k = " + std::to_string(k) +
                                 " is not coprime to the field characteristic " + std::to_string(p));
    if (!ctx_->contains(x))
        throw precondition_error("element is not in the group context");
}

const Matrix& RootsEngine::layer_action_of(const ClassKey& b, int layer) const {
    auto key = std::make_pair(b.str(), layer);
    {
        std::lock_guard<std::mutex> lock(*cache_mutex_);
        auto it = action_cache_.find(key);
        if (it != action_cache_.end()) return it->second;
    }
    Matrix action = series_.layer_action(quotient_.lift_class(b), layer);
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    return action_cache_.emplace(std::move(key), std::move(action)).first->second;
}

Subspace RootsEngine::layer_fixed_space(const ClassKey& b, int layer) const {
    const Matrix& action = layer_action_of(b, layer);
    return kernel_basis(action - Matrix::identity(ctx_->field(), action.rows()));
}

RootClassScreening RootsEngine::screen_root_classes(const Matrix& x, long k) const {
    require_admissible(x, k);
    RootClassScreening res;
    ClassKey a = quotient_.project(x);
    res.roots = quotient_.kth_root_classes(a, k);
    for (const ClassKey& b : res.roots.roots) {
        CandidateVerdict verdict;
        verdict.b = b;
        verdict.survives = true;
        for (int j = 0; j < series_.length(); ++j) {
            LayerComparison cmp;
            cmp.layer = j;
            cmp.fixed_a = layer_fixed_space(a, j);
            cmp.fixed_b = layer_fixed_space(b, j);
            cmp.contained = cmp.fixed_b.contains(cmp.fixed_a);
            if (!cmp.contained && verdict.survives) {
                verdict.survives = false;
                verdict.failing_layer = j;
                for (const Vec& v : cmp.fixed_a.basis())
                    if (!cmp.fixed_b.contains(v)) {
                        verdict.violating_coords = v;
                        verdict.violating_ambient = series_.layer(j).rep.from_coords(v);
                        break;
                    }
            }
            verdict.layers.push_back(std::move(cmp));
        }
        if (verdict.survives) res.admissible.push_back(b);
        res.verdicts.push_back(std::move(verdict));
    }
    return res;
}

CorrectionOperator RootsEngine::correction_operator(const ClassKey& b, int layer, long k) const {
    if (k < 1) throw precondition_error("k must be a positive integer");
    CorrectionOperator op;
    op.b = b;
    op.layer = layer;
    op.k = k;
    op.action = layer_action_of(b, layer);
    const int d = op.action.rows();
    auto sig_inv = inverse(op.action);
    if (!sig_inv) throw internal_error("layer action is singular");
    Matrix acc = Matrix::identity(ctx_->field(), d);
    Matrix pw = Matrix::identity(ctx_->field(), d);
    for (long i = 1; i < k; ++i) {
        pw = pw * *sig_inv;
        acc = acc + pw;
    }
    op.matrix = std::move(acc);
    op.det = det(op.matrix);
    if (!op.det.is_zero()) op.inverse = inverse(op.matrix);
    return op;
}

SpectralScreening RootsEngine::screen_root_classes_spectral(const Matrix& x, long k) const {
    require_admissible(x, k);
    SpectralScreening res;
    ClassKey a = quotient_.project(x);
    res.roots = quotient_.kth_root_classes(a, k);
    for (const ClassKey& b : res.roots.roots) {
        SpectralVerdict verdict;
        verdict.b = b;
        verdict.survives = true;
        for (int j = 0; j < series_.length(); ++j) {
            CorrectionOperator op = correction_operator(b, j, k);
            verdict.survives = verdict.survives && !op.det.is_zero();
            verdict.layers.push_back(std::move(op));
        }
        if (verdict.survives) res.admissible.push_back(b);
        res.verdicts.push_back(std::move(verdict));
    }
    return res;
}

std::optional<Matrix> RootsEngine::try_layer_descent(const Matrix& target, const ClassKey& b,
                                                     long k, bool require_invertible) const {
    Matrix y = quotient_.lift_class(b);
    for (int j = 0; j < series_.length(); ++j) {
        Matrix defect = y.pow(-k) * target;
        if (!series_.member_of_level(j, defect))
            throw internal_error("root descent defect left the expected series member at layer " +
                                 std::to_string(j));
        Vec v = series_.layer_coords(j, defect);
        CorrectionOperator op = correction_operator(b, j, k);
        Vec w;
        if (op.inverse) {
            w = op.inverse->apply(v);
        } else if (require_invertible) {
            throw precondition_error("candidate class is not admissible: singular correction "
                                     "operator at layer " + std::to_string(j));
        } else {
            auto sol = solve_linear(op.matrix, v);
            if (!sol) return std::nullopt; // defect unreachable over this class
            w = *sol;
        }
        y = y * series_.lift_from_layer(j, w);
    }
    if (!(y.pow(k) == target)) {
        if (require_invertible)
            throw internal_error("root construction failed its own verification");
        return std::nullopt;
    }
    return y;
}

Matrix RootsEngine::construct_root(const Matrix& x, const Matrix& n, const ClassKey& b,
                                   long k) const {
    require_admissible(x, k);
    if (!ctx_->unipotent_membership(n))
        throw precondition_error("n is not in the unipotent part");
    Matrix target = x * n;
    auto y = try_layer_descent(target, b, k, true);
    // soundness is checked unconditionally inside the descent
    if (!(quotient_.project(*y) == b))
        throw internal_error("constructed root has the wrong class");
    return *y;
}

Certificate RootsEngine::coset_root_decision(const Matrix& x, long k) const {
    require_admissible(x, k);
    Certificate cert;
    cert.x = x;
    cert.k = k;
    cert.mode = QueryMode::Coset;
    cert.base = quotient_.project(x);
    cert.screening = screen_root_classes(x, k);
    cert.decision = !cert.screening.admissible.empty();
    cert.roots_empty = cert.screening.roots.empty();
    if (cert.decision) {
        cert.witness = cert.screening.admissible.front(); // lexicographically least
        cert.root = construct_root(x, Matrix::identity(ctx_->field(), ctx_->dim()),
                                   *cert.witness, k);
        for (int j = 0; j < series_.length(); ++j)
            cert.witness_corrections.push_back(correction_operator(*cert.witness, j, k));
        // verification transcript: recheck the emitted witness exactly
        if (!(cert.root->pow(k) == x))
            throw internal_error("certificate root fails y^k = x");
        cert.transcript.push_back("recomputed y^k and matched x exactly");
        if (!(quotient_.project(*cert.root) == *cert.witness))
            throw internal_error("certificate root has the wrong class");
        cert.transcript.push_back("root class equals witness class " + cert.witness->str());
        for (const auto& op : cert.witness_corrections)
            if (op.det.is_zero())
                throw internal_error("witness correction operator is singular");
        cert.transcript.push_back("correction operators invertible on all " +
                                  std::to_string(series_.length()) + " layers");
    } else if (cert.roots_empty) {
        cert.transcript.push_back("no class satisfies b^" + std::to_string(k) + " = a");
    } else {
        for (const auto& verdict : cert.screening.verdicts) {
            if (verdict.survives)
                throw internal_error("negative decision with a surviving candidate");
            ObstructionRecord rec;
            rec.b = verdict.b;
            rec.layer = verdict.failing_layer;
            rec.fixed_coords = verdict.violating_coords;
            rec.fixed_ambient = verdict.violating_ambient;
            // recheck the obstruction: v fixed by a, moved by b
            const Matrix& sa = layer_action_of(cert.base, rec.layer);
            const Matrix& sb = layer_action_of(rec.b, rec.layer);
            if (!(sa.apply(rec.fixed_coords) == rec.fixed_coords))
                throw internal_error("obstruction vector is not fixed by the base class");
            if (sb.apply(rec.fixed_coords) == rec.fixed_coords)
                throw internal_error("obstruction vector is fixed by the candidate");
            cert.obstructions.push_back(std::move(rec));
        }
        cert.transcript.push_back("every candidate carries a fixed vector it fails to preserve");
    }
    return cert;
}

Vec RootsEngine::fixed_point_conjugator(const Matrix& x, const Vec& v, int layer) const {
    if (!ctx_->contains(x))
        throw precondition_error("element is not in the group context");
    ClassKey cls = quotient_.project(x);
    Subspace fixed = layer_fixed_space(cls, layer);
    if (fixed.dim() != 0)
        throw precondition_error("fixed space on layer " + std::to_string(layer) +
                                 " is nonzero; the conjugating vector is not unique");
    const Matrix& action = layer_action_of(cls, layer);
    Matrix lhs = *inverse(action) - Matrix::identity(ctx_->field(), action.rows());
    auto w = solve_linear(lhs, v);
    if (!w) throw internal_error("conjugator system inconsistent despite trivial fixed space");
    Subspace ker = kernel_basis(lhs);
    if (ker.dim() != 0) throw internal_error("conjugator is not unique despite trivial fixed space");
    return *w;
}

ObstructionSubspace RootsEngine::obstruction_subspace(const Matrix& x, const ClassKey& b,
                                                      int layer, long k) const {
    require_admissible(x, k);
    ClassKey a = quotient_.project(x);
    Subspace fa = layer_fixed_space(a, layer);
    Subspace fb = layer_fixed_space(b, layer);
    if (fa == fb)
        throw precondition_error("fixed spaces of the base and candidate agree on this layer");
    const Field& f = ctx_->field();
    const Matrix& sa = layer_action_of(a, layer);
    const Matrix& sb = layer_action_of(b, layer);
    const int d = sa.rows();

    ObstructionSubspace out;
    out.layer = layer;
    out.b = b;
    out.k = k;
    out.im_a_minus_i = image(sa - Matrix::identity(f, d));

    // induced action of the candidate on layer / Im(base action - I)
    Subspace w0 = out.im_a_minus_i;
    Subspace full = Subspace::full(f, d);
    Subspace rep = full.complement_of(w0);
    const int q = rep.dim();
    Matrix induced(f, q, q);
    for (int c = 0; c < q; ++c) {
        Vec col = rep.coords_of(w0.reduce(sb.apply(rep.basis()[size_t(c)])));
        for (int r = 0; r < q; ++r) induced(r, c) = col[size_t(r)];
    }
    Subspace fix_quot = kernel_basis(induced - Matrix::identity(f, q));
    std::vector<Vec> lifted;
    for (const Vec& c : fix_quot.basis()) lifted.push_back(rep.from_coords(c));
    out.fix_b_quotient_lift = Subspace::from_span(f, d, lifted);
    out.subspace = w0.sum(out.fix_b_quotient_lift);

    CorrectionOperator op = correction_operator(b, layer, k);
    out.im_correction = image(op.matrix);

    // invariants of the construction, verified exactly
    Subspace ucomp = full.complement_of(out.subspace);
    for (const Vec& v : ucomp.basis())
        if (!out.subspace.contains(vec_sub(sa.apply(v), v)))
            throw internal_error("base class acts nontrivially on the obstruction quotient");
    {
        Subspace uu = out.subspace;
        Subspace urep = full.complement_of(uu);
        const int uq = urep.dim();
        Matrix bq(f, uq, uq);
        for (int c = 0; c < uq; ++c) {
            Vec col = urep.coords_of(uu.reduce(sb.apply(urep.basis()[size_t(c)])));
            for (int r = 0; r < uq; ++r) bq(r, c) = col[size_t(r)];
        }
        if (kernel_basis(bq - Matrix::identity(f, uq)).dim() != 0)
            throw internal_error("candidate has a fixed vector on the obstruction quotient");
    }
    if (!out.subspace.contains(out.im_correction))
        throw internal_error("reachable set is not contained in the obstruction subspace");
    return out;
}

RegularityReport RootsEngine::pk_regularity(const Matrix& g, long k) const {
    if (k < 1) throw precondition_error("k must be a positive integer");
    if (!ctx_->contains(g))
        throw precondition_error("element is not in the group context");
    RegularityReport rep;
    rep.cls = quotient_.project(g);
    rep.k = k;
    Poly cyc = Poly::ones_sum(ctx_->field(), k);
    for (int j = 0; j < series_.length(); ++j) {
        const Matrix& action = layer_action_of(rep.cls, j);
        Poly cp = char_poly(action);
        Poly g0 = poly_gcd(cp, cyc);
        rep.regular = rep.regular && g0.is_one();
        rep.layer_index.push_back(j);
        rep.charpolys.push_back(std::move(cp));
        rep.gcds.push_back(std::move(g0));
    }
    return rep;
}

SurjectivityReport RootsEngine::group_pk_surjective(long k) const {
    if (k < 1) throw precondition_error("k must be a positive integer");
    long p = ctx_->field().characteristic();
    if (p != 0 && k % p == 0)
        throw precondition_error("k is not coprime to the field characteristic");
    std::vector<ClassKey> classes;
    if (quotient_.mode() == AbelianQuotient::Mode::Finite) {
        classes = quotient_.all_classes();
    } else {
        if (!quotient_.lattice().finite_class_group())
            throw unsupported_error(
                "the class space is infinite (nonzero lattice rank); "
                "per-coset surjectivity cannot be exhausted");
        classes = quotient_.all_classes();
    }
    SurjectivityReport rep;
    rep.k = k;
    for (const ClassKey& cls : classes) {
        Matrix x = quotient_.lift_class(cls);
        bool covered = coset_root_decision(x, k).decision;
        rep.per_class.emplace_back(cls, covered);
        if (!covered && rep.surjective) {
            rep.surjective = false;
            rep.first_failing = cls;
        }
    }
    return rep;
}

bool RootsEngine::center_pk_surjective(const EnumeratedGroup& e, long k) const {
    if (!ctx_->finite_mode())
        throw unsupported_error("center surjectivity check requires finite mode");
    if (k < 1) throw precondition_error("k must be a positive integer");
    std::vector<int> z = center(e);
    std::vector<char> in_center(size_t(e.size()), 0);
    for (int i : z) in_center[size_t(i)] = 1;
    std::vector<char> hit(size_t(e.size()), 0);
    for (int i : z) {
        int t = e.index_of(e.elements[size_t(i)].pow(k));
        if (t >= 0) hit[size_t(t)] = 1;
    }
    for (int i : z)
        if (!hit[size_t(i)]) return false;
    return true;
}

std::optional<Matrix> RootsEngine::center_of_centralizer_root(const EnumeratedGroup& e,
                                                              const Matrix& x, long k) const {
    require_admissible(x, k);
    if (!ctx_->finite_mode())
        throw unsupported_error("centralizer search requires finite mode");
    for (int i = 0; i < ctx_->dim(); ++i)
        for (int j = i + 1; j < ctx_->dim(); ++j)
            if (!x(i, j).is_zero())
                throw unsupported_error("element is not diagonal; semisimplicity is not established");
    std::vector<int> zg = centralizer(e, x);
    std::vector<int> zz = center_of_subgroup(e, zg);
    for (int idx : zz) {
        const Matrix& y = e.elements[size_t(idx)];
        if (y.pow(k) == x) return y;
    }
    return std::nullopt;
}

std::map<long, ProbeResult> RootsEngine::multi_k_probe(const Matrix& x,
                                                       const std::vector<long>& ks,
                                                       const EnumeratedGroup* e) const {
    if (!ctx_->contains(x))
        throw precondition_error("element is not in the group context");
    std::map<long, ProbeResult> out;
    if (ctx_->finite_mode()) {
        if (!e) throw precondition_error("finite-mode probe requires an enumerated group");
        for (long k : ks) {
            PowerImage img = power_image(*e, k);
            int idx = e->index_of(x);
            if (idx < 0) throw internal_error("probed element missing from the enumeration");
            out[k] = img.marked[size_t(idx)] ? ProbeResult::InImage : ProbeResult::NotInImage;
        }
        return out;
    }
    for (long k : ks) {
        ClassKey a = quotient_.project(x);
        RootSet roots = quotient_.kth_root_classes(a, k);
        if (roots.empty()) {
            out[k] = ProbeResult::NotInImage;
            continue;
        }
        RootClassScreening screening = screen_root_classes(x, k);
        if (!screening.admissible.empty()) {
            out[k] = ProbeResult::InImage; // the whole coset is covered
            continue;
        }
        // no admissible class: attempt an explicit per-class layer solve
        bool found = false;
        for (const ClassKey& b : roots.roots) {
            if (try_layer_descent(x, b, k, false)) { found = true; break; }
        }
        if (found)
            out[k] = ProbeResult::InImage;
        else if (series_.length() <= 1)
            out[k] = ProbeResult::NotInImage; // single-layer solves are complete
        else
            out[k] = ProbeResult::Unsupported;
    }
    return out;
}

} // namespace pkroots
