#include "pkroots/oracle.hpp"

#include <algorithm>
#include <map>

namespace pkroots {

EnumeratedGroup enumerate_group(const TriangularGroup& ctx, long cap) {
    if (!ctx.finite_mode())
        throw unsupported_error("oracle enumeration requires a finite field context");
    EnumeratedGroup e;
    e.ctx = &ctx;
    e.cap = cap;
    Matrix id = Matrix::identity(ctx.field(), ctx.dim());
    e.elements.push_back(id);
    e.index.emplace(id.canonical_key(), 0);
    e.depth.push_back(0);
    for (size_t head = 0; head < e.elements.size(); ++head) {
        Matrix cur = e.elements[head];
        for (const Matrix& gen : ctx.generators()) {
            Matrix next = cur * gen;
            std::string key = next.canonical_key();
            if (e.index.count(key)) continue;
            if (long(e.elements.size()) >= cap)
                throw validation_error("oracle enumeration exceeds cap " + std::to_string(cap));
            e.index.emplace(std::move(key), int(e.elements.size()));
            e.elements.push_back(std::move(next));
            e.depth.push_back(e.depth[head] + 1);
        }
    }
    return e;
}

long PowerImage::image_size() const {
    long n = 0;
    for (char m : marked) n += m ? 1 : 0;
    return n;
}

PowerImage power_image(const EnumeratedGroup& e, long k) {
    PowerImage img;
    img.k = k;
    img.marked.assign(size_t(e.size()), 0);
    img.preimage_count.assign(size_t(e.size()), 0);
    img.roots.assign(size_t(e.size()), {});
    for (int i = 0; i < e.size(); ++i) {
        int t = e.index_of(e.elements[size_t(i)].pow(k));
        if (t < 0) throw internal_error("power image left the enumerated set");
        img.marked[size_t(t)] = 1;
        img.preimage_count[size_t(t)] += 1;
        img.roots[size_t(t)].push_back(i);
    }
    return img;
}

bool coset_coverage_truth(const EnumeratedGroup& e, const PowerImage& img, const Matrix& x) {
    for (const Matrix& n : e.ctx->unipotent_elements()) {
        int idx = e.index_of(x * n);
        if (idx < 0) throw precondition_error("coset representative is not in the enumerated group");
        if (!img.marked[size_t(idx)]) return false;
    }
    return true;
}

bool coset_coverage_truth(const EnumeratedGroup& e, const Matrix& x, long k) {
    return coset_coverage_truth(e, power_image(e, k), x);
}

std::vector<int> centralizer(const EnumeratedGroup& e, const Matrix& x) {
    std::vector<int> out;
    for (int i = 0; i < e.size(); ++i) {
        const Matrix& g = e.elements[size_t(i)];
        if (g * x == x * g) out.push_back(i);
    }
    return out;
}

std::vector<int> center(const EnumeratedGroup& e) {
    std::vector<int> out;
    for (int i = 0; i < e.size(); ++i) {
        const Matrix& g = e.elements[size_t(i)];
        bool central = true;
        for (const Matrix& gen : e.ctx->generators())
            if (!(g * gen == gen * g)) { central = false; break; }
        if (central) out.push_back(i);
    }
    return out;
}

std::vector<int> subgroup_closure(const EnumeratedGroup& e, const std::vector<int>& gens) {
    std::vector<char> seen(size_t(e.size()), 0);
    std::vector<int> closure{0}; // identity
    seen[0] = 1;
    for (size_t head = 0; head < closure.size(); ++head)
        for (int g : gens) {
            int next = e.index_of(e.elements[size_t(closure[head])] * e.elements[size_t(g)]);
            if (next < 0) throw internal_error("subgroup closure left the group");
            if (!seen[size_t(next)]) {
                seen[size_t(next)] = 1;
                closure.push_back(next);
            }
        }
    std::sort(closure.begin(), closure.end());
    return closure;
}

std::vector<int> generating_subset(const EnumeratedGroup& e, const std::vector<int>& subgroup) {
    std::vector<int> gens;
    std::vector<char> covered(size_t(e.size()), 0);
    covered[0] = 1;
    for (int idx : subgroup) {
        if (covered[size_t(idx)]) continue;
        gens.push_back(idx);
        for (int c : subgroup_closure(e, gens)) covered[size_t(c)] = 1;
    }
    return gens;
}

std::vector<int> center_of_subgroup(const EnumeratedGroup& e, const std::vector<int>& subgroup) {
    std::vector<int> gens = generating_subset(e, subgroup);
    std::vector<int> out;
    for (int idx : subgroup) {
        const Matrix& y = e.elements[size_t(idx)];
        bool central = true;
        for (int g : gens) {
            const Matrix& h = e.elements[size_t(g)];
            if (!(y * h == h * y)) { central = false; break; }
        }
        if (central) out.push_back(idx);
    }
    return out;
}

CompareReport compare_all(const EnumeratedGroup& e, const std::vector<long>& ks,
                          const std::function<bool(const Matrix&, long)>& decision) {
    CompareReport rep;
    // first enumerated element of each diagonal class represents the coset
    std::map<ClassKey, Matrix> reps;
    for (const Matrix& g : e.elements)
        reps.emplace(ClassKey{e.ctx->diag_class(g)}, g);
    for (long k : ks) {
        PowerImage img = power_image(e, k);
        for (const auto& [cls, rep_el] : reps) {
            CompareRow row;
            row.cls = cls;
            row.k = k;
            row.criterion = decision(rep_el, k);
            row.truth = coset_coverage_truth(e, img, rep_el);
            row.match = (row.criterion == row.truth);
            row.pk_size = img.image_size();
            rep.all_match = rep.all_match && row.match;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

} // namespace pkroots
