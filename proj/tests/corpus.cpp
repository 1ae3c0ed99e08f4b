#include "corpus.hpp"

namespace pkroots::corpus {

Matrix diag_mat(const Field& f, const std::vector<long>& entries) {
    Matrix m(f, int(entries.size()), int(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i)
        m(int(i), int(i)) = Scalar::of_int(f, entries[i]);
    return m;
}

Matrix elem_mat(const Field& f, int n, int i, int j) {
    Matrix m = Matrix::identity(f, n);
    m(i, j) = Scalar::one(f);
    return m;
}

long smallest_primitive_root(long p) {
    auto order = [&](long a) {
        long x = a % p, ord = 1;
        while (x != 1) {
            x = (x * a) % p;
            ++ord;
        }
        return ord;
    };
    for (long r = 2; r < p; ++r)
        if (order(r) == p - 1) return r;
    throw internal_error("no primitive root found");
}

namespace {

GroupSpec make(const std::string& name, const Field& f, int dim, std::vector<Matrix> gens,
               std::vector<Matrix> lie = {}) {
    GroupSpec spec;
    spec.name = name;
    spec.field = f;
    spec.dim = dim;
    spec.generators = std::move(gens);
    spec.lie_algebra = std::move(lie);
    return spec;
}

} // namespace

std::vector<GroupSpec> finite_corpus() {
    std::vector<GroupSpec> out;
    for (long p : {3L, 5L, 7L, 11L}) {
        Field f = Field::Fp(p);
        const std::string sp = std::to_string(p);
        long r = smallest_primitive_root(p);
        long r2 = (r * r) % p;

        // full affine line: A cyclic of order p-1 acting faithfully
        out.push_back(make("affine_full_p" + sp, f, 2,
                           {diag_mat(f, {r, 1}), elem_mat(f, 2, 0, 1)}));
        // involution action
        out.push_back(make("affine_inv_p" + sp, f, 2,
                           {diag_mat(f, {p - 1, 1}), elem_mat(f, 2, 0, 1)}));
        // translation plane with mixed weights (r, r^2)
        out.push_back(make("plane_mixed_p" + sp, f, 3,
                           {diag_mat(f, {r, r2, 1}), elem_mat(f, 3, 0, 2), elem_mat(f, 3, 1, 2)}));
        // translation plane with a repeated weight: scalar layer action
        out.push_back(make("plane_scalar_p" + sp, f, 3,
                           {diag_mat(f, {r, r, 1}), elem_mat(f, 3, 0, 2), elem_mat(f, 3, 1, 2)}));
        // Heisenberg unipotent part, no diagonal
        out.push_back(make("heis_p" + sp, f, 3, {elem_mat(f, 3, 0, 1), elem_mat(f, 3, 1, 2)}));
        // Heisenberg with an involution torus
        out.push_back(make("heisdiag_p" + sp, f, 3,
                           {diag_mat(f, {p - 1, 1, 1}), elem_mat(f, 3, 0, 1), elem_mat(f, 3, 1, 2)}));
        // two independent weights on one superdiagonal (2-dim merged layer)
        out.push_back(make("merged_p" + sp, f, 4,
                           {diag_mat(f, {r, 1, r2, 1}), elem_mat(f, 4, 0, 1), elem_mat(f, 4, 2, 3)}));
        // non-semisimple generator r*I + E12
        Matrix jordan = diag_mat(f, {r, r});
        jordan(0, 1) = Scalar::one(f);
        out.push_back(make("jordan_p" + sp, f, 2, {jordan}));
        // diagonal-only group: trivial unipotent part
        out.push_back(make("torus_p" + sp, f, 2, {diag_mat(f, {r, 1})}));
        // product of two cyclic class groups
        out.push_back(make("bitorus_p" + sp, f, 2,
                           {diag_mat(f, {r, 1}), diag_mat(f, {1, r}), elem_mat(f, 2, 0, 1)}));
    }
    // depth-3 central series: full unitriangular group in dimension 4
    Field f3 = Field::Fp(3);
    out.push_back(make("ut4_p3", f3, 4,
                       {elem_mat(f3, 4, 0, 1), elem_mat(f3, 4, 1, 2), elem_mat(f3, 4, 2, 3)}));
    // the 100-element running example
    Field f5 = Field::Fp(5);
    out.push_back(make("g5", f5, 3,
                       {diag_mat(f5, {4, 2, 1}), elem_mat(f5, 3, 0, 2), elem_mat(f5, 3, 1, 2)}));
    return out;
}

std::vector<GroupSpec> rational_corpus() {
    Field q = Field::Q();
    std::vector<GroupSpec> out;

    Matrix e12_3 = elem_mat(q, 3, 0, 1) - Matrix::identity(q, 3);
    Matrix e23_3 = elem_mat(q, 3, 1, 2) - Matrix::identity(q, 3);
    Matrix e13_3 = elem_mat(q, 3, 0, 2) - Matrix::identity(q, 3);
    out.push_back(make("heis_q", q, 3, {elem_mat(q, 3, 0, 1), elem_mat(q, 3, 1, 2)},
                       {e12_3, e23_3, e13_3}));

    Matrix e12_2 = elem_mat(q, 2, 0, 1) - Matrix::identity(q, 2);
    out.push_back(make("qline6", q, 2, {diag_mat(q, {6, 1}), elem_mat(q, 2, 0, 1)}, {e12_2}));
    out.push_back(make("qline_neg", q, 2, {diag_mat(q, {-2, 2}), elem_mat(q, 2, 0, 1)}, {e12_2}));
    out.push_back(make("qsign", q, 2,
                       {diag_mat(q, {-1, 1}), diag_mat(q, {2, 1}), elem_mat(q, 2, 0, 1)}, {e12_2}));

    out.push_back(make("qheisdiag", q, 3,
                       {diag_mat(q, {2, 1, 1}), elem_mat(q, 3, 0, 1), elem_mat(q, 3, 1, 2)},
                       {e12_3, e23_3, e13_3}));

    Matrix e12_4 = elem_mat(q, 4, 0, 1) - Matrix::identity(q, 4);
    Matrix e34_4 = elem_mat(q, 4, 2, 3) - Matrix::identity(q, 4);
    out.push_back(make("qmerged", q, 4,
                       {diag_mat(q, {2, 1, 3, 1}), elem_mat(q, 4, 0, 1), elem_mat(q, 4, 2, 3)},
                       {e12_4, e34_4}));
    return out;
}

} // namespace pkroots::corpus
