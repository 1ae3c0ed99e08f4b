#include "pkroots/abelian.hpp"

#include <algorithm>
#include <map>

namespace pkroots {

bool ClassKey::operator<(const ClassKey& o) const {
    if (diag.size() != o.diag.size())
        throw internal_error("class comparison across dimensions");
    for (size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] < o.diag[i]) return true;
        if (o.diag[i] < diag[i]) return false;
    }
    return false;
}

std::string ClassKey::str() const { return vec_str(diag); }

bool ClassKey::is_trivial() const {
    for (const auto& d : diag)
        if (!d.is_one()) return false;
    return true;
}

namespace {
ClassKey class_pow(const ClassKey& c, long k) {
    ClassKey r = c;
    for (auto& d : r.diag) d = d.pow(k);
    return r;
}
} // namespace

AbelianQuotient AbelianQuotient::build(const TriangularGroup& ctx) {
    AbelianQuotient q;
    q.ctx_ = &ctx;
    if (ctx.finite_mode()) {
        q.mode_ = Mode::Finite;
        // first enumerated element of each diagonal class is its representative
        std::map<ClassKey, Matrix> reps;
        for (const Matrix& g : ctx.elements()) {
            ClassKey c{ctx.diag_class(g)};
            reps.emplace(c, g);
        }
        for (auto& [c, rep] : reps) {
            q.classes_.push_back(c);
            q.representatives_.push_back(rep);
        }
    } else {
        q.mode_ = Mode::Lattice;
        q.lattice_ = std::make_unique<DiagonalLattice>(
            DiagonalLattice::build(ctx.dim(), ctx.generators()));
    }
    return q;
}

ClassKey AbelianQuotient::project(const Matrix& g) const {
    return ClassKey{ctx_->diag_class(g)};
}

std::vector<ClassKey> AbelianQuotient::all_classes() const {
    if (mode_ == Mode::Finite) return classes_;
    std::vector<ClassKey> out;
    for (const ZVec& w : lattice_->enumerate_class_words())
        out.push_back(project(lift_word(w)));
    std::sort(out.begin(), out.end());
    return out;
}

long AbelianQuotient::size() const {
    if (mode_ != Mode::Finite) throw unsupported_error("size() requires finite mode");
    return long(classes_.size());
}

RootSet AbelianQuotient::kth_root_classes(const ClassKey& a, long k) const {
    if (k < 1) throw precondition_error("kth_root_classes requires k >= 1");
    RootSet rs;
    rs.base = a;
    rs.k = k;
    if (mode_ == Mode::Finite) {
        for (const ClassKey& c : classes_)
            if (class_pow(c, k) == a) rs.roots.push_back(c);
        return rs; // classes_ is already in canonical order
    }
    auto target = lattice_->encode(a.diag);
    if (!target) return rs; // class outside the generated quotient: no roots
    std::vector<std::pair<ClassKey, ZVec>> found;
    for (const ZVec& w : lattice_->solve_root_words(*target, k)) {
        ClassKey b = project(lift_word(w));
        found.emplace_back(std::move(b), w);
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [b, w] : found) {
        rs.roots.push_back(std::move(b));
        rs.words.push_back(std::move(w));
    }
    return rs;
}

Matrix AbelianQuotient::lift_word(const ZVec& z) const {
    Matrix m = Matrix::identity(ctx_->field(), ctx_->dim());
    const auto& gens = ctx_->generators();
    for (size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 0) continue;
        if (!z[i].fits_slong_p())
            throw unsupported_error("generator word exponent too large");
        m = m * gens[i].pow(z[i].get_si());
    }
    return m;
}

Matrix AbelianQuotient::lift_class(const ClassKey& b) const {
    if (mode_ == Mode::Finite) {
        auto it = std::lower_bound(classes_.begin(), classes_.end(), b);
        if (it == classes_.end() || !(*it == b))
            throw precondition_error("class " + b.str() + " is not in the generated quotient");
        return representatives_[size_t(it - classes_.begin())];
    }
    auto enc = lattice_->encode(b.diag);
    if (enc) {
        auto words = lattice_->solve_root_words(*enc, 1);
        for (const ZVec& w : words) {
            Matrix m = lift_word(w);
            if (project(m) == b) return m;
        }
    }
    throw precondition_error("class " + b.str() + " is not in the generated quotient");
}

const DiagonalLattice& AbelianQuotient::lattice() const {
    if (mode_ != Mode::Lattice) throw unsupported_error("lattice() requires lattice mode");
    return *lattice_;
}

} // namespace pkroots
