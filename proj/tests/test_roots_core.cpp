#include <random>

#include "doctest.h"

#include "corpus.hpp"

using namespace pkroots;
using corpus::diag_mat;
using corpus::elem_mat;

namespace {

TriangularGroup g5() {
    Field f = Field::Fp(5);
    GroupSpec spec;
    spec.name = "g5";
    spec.field = f;
    spec.dim = 3;
    spec.generators = {diag_mat(f, {4, 2, 1}), elem_mat(f, 3, 0, 2), elem_mat(f, 3, 1, 2)};
    return TriangularGroup::validate(spec);
}

// 4x4 realization of the running example with both translation weights on
// one superdiagonal: a single 2-dim layer carrying diag(4,2).
TriangularGroup g5_merged() {
    Field f = Field::Fp(5);
    GroupSpec spec;
    spec.name = "g5_merged";
    spec.field = f;
    spec.dim = 4;
    spec.generators = {diag_mat(f, {4, 1, 2, 1}), elem_mat(f, 4, 0, 1), elem_mat(f, 4, 2, 3)};
    return TriangularGroup::validate(spec);
}

TriangularGroup heis_q() {
    Field q = Field::Q();
    GroupSpec spec;
    spec.name = "heis_q";
    spec.field = q;
    spec.dim = 3;
    spec.generators = {elem_mat(q, 3, 0, 1), elem_mat(q, 3, 1, 2)};
    Matrix e12 = elem_mat(q, 3, 0, 1) - Matrix::identity(q, 3);
    Matrix e23 = elem_mat(q, 3, 1, 2) - Matrix::identity(q, 3);
    Matrix e13 = elem_mat(q, 3, 0, 2) - Matrix::identity(q, 3);
    spec.lie_algebra = {e12, e23, e13};
    return TriangularGroup::validate(spec);
}

ClassKey key(const Field& f, std::initializer_list<long> diag) {
    ClassKey c;
    for (long d : diag) c.diag.push_back(Scalar::of_int(f, d));
    return c;
}

} // namespace

TEST_CASE("screen_root_classes on the running example") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    Field f = ctx.field();
    const Matrix& g = ctx.generators()[0];

    RootClassScreening r2 = eng.screen_root_classes(g.pow(2), 2);
    REQUIRE(r2.roots.roots.size() == 2);
    CHECK(r2.roots.roots[0] == key(f, {4, 2, 1}));
    CHECK(r2.roots.roots[1] == key(f, {4, 3, 1}));
    CHECK(r2.admissible.empty());
    // both candidates fail at the superdiag-2 layer where a fixes everything
    for (const auto& verdict : r2.verdicts) {
        CHECK_FALSE(verdict.survives);
        CHECK(verdict.failing_layer == 1);
        CHECK(verdict.layers[1].fixed_a.dim() == 1);
        CHECK(verdict.layers[1].fixed_b.dim() == 0);
    }

    RootClassScreening r3 = eng.screen_root_classes(g.pow(3), 3);
    REQUIRE(r3.roots.roots.size() == 1);
    CHECK(r3.roots.roots[0] == key(f, {4, 2, 1}));
    CHECK(r3.admissible == r3.roots.roots);
    // a = (4,3,1) fixes nothing on either layer
    for (const auto& cmp : r3.verdicts[0].layers) CHECK(cmp.fixed_a.dim() == 0);

    RootClassScreening re = eng.screen_root_classes(Matrix::identity(f, 3), 4);
    bool trivial_survives = false;
    for (const auto& b : re.admissible)
        if (b.is_trivial()) trivial_survives = true;
    CHECK(trivial_survives);
}

TEST_CASE("coprimality with the characteristic is a hard precondition") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    CHECK_THROWS_AS((void)eng.screen_root_classes(ctx.generators()[0], 5), precondition_error);
    CHECK_THROWS_AS((void)eng.coset_root_decision(ctx.generators()[0], 10), precondition_error);
    CHECK_THROWS_AS((void)eng.screen_root_classes(ctx.generators()[0], 0), precondition_error);
    // elements outside the context are rejected
    Matrix foreign = diag_mat(ctx.field(), {2, 2, 2});
    CHECK_THROWS_AS((void)eng.coset_root_decision(foreign, 2), precondition_error);
}

TEST_CASE("correction operators on the merged layer") {
    TriangularGroup ctx = g5_merged();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    Field f = ctx.field();
    ClassKey b = key(f, {4, 1, 2, 1});

    CorrectionOperator t2 = eng.correction_operator(b, 0, 2);
    CHECK(t2.matrix == diag_mat(f, {0, 4}));
    CHECK(t2.det.is_zero());
    CHECK_FALSE(t2.inverse.has_value());

    CorrectionOperator t3 = eng.correction_operator(b, 0, 3);
    CHECK(t3.matrix == diag_mat(f, {1, 3}));
    CHECK_FALSE(t3.det.is_zero());

    CorrectionOperator tid = eng.correction_operator(key(f, {1, 1, 1, 1}), 0, 4);
    CHECK(tid.matrix == Matrix::identity(f, 2).scaled(Scalar::fp(5, 4)));
}

TEST_CASE("the correction operator commutes with the layer action") {
    TriangularGroup ctx = g5_merged();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    for (long m = 0; m < 4; ++m) {
        ClassKey b = eng.quotient().project(ctx.generators()[0].pow(m));
        for (long k = 1; k <= 4; ++k) {
            CorrectionOperator t = eng.correction_operator(b, 0, k);
            CHECK(t.matrix * t.action == t.action * t.matrix);
        }
    }
}

TEST_CASE("screen_root_classes_spectral agrees with screen_root_classes on the running example") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    const Matrix& g = ctx.generators()[0];
    for (long m = 0; m < 4; ++m)
        for (long k : {1L, 2L, 3L, 4L, 6L}) {
            RootClassScreening a = eng.screen_root_classes(g.pow(m), k);
            SpectralScreening b = eng.screen_root_classes_spectral(g.pow(m), k);
            CHECK(a.admissible == b.admissible);
        }
}

TEST_CASE("coset decisions on the running example with certificates") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    Field f = ctx.field();
    const Matrix& g = ctx.generators()[0];

    Certificate neg = eng.coset_root_decision(g.pow(2), 2);
    CHECK_FALSE(neg.decision);
    CHECK_FALSE(neg.roots_empty);
    REQUIRE(neg.obstructions.size() == 2);
    for (const auto& o : neg.obstructions) {
        CHECK(o.layer == 1);
        CHECK(o.fixed_ambient == Vec{Scalar::fp(5, 1)});
    }

    Certificate pos = eng.coset_root_decision(g.pow(3), 3);
    CHECK(pos.decision);
    REQUIRE(pos.witness.has_value());
    CHECK(*pos.witness == key(f, {4, 2, 1}));
    CHECK(pos.root->pow(3) == g.pow(3));

    Certificate triv = eng.coset_root_decision(Matrix::identity(f, 3), 4);
    CHECK(triv.decision);
    CHECK(triv.witness->is_trivial());
    CHECK(triv.root->is_identity());
}

TEST_CASE("construct_root reproduces the derived matrices") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    Field f = ctx.field();
    const Matrix& g = ctx.generators()[0];
    Matrix n11 = ctx.generators()[1] * ctx.generators()[2]; // n_(1,1)

    Matrix y = eng.construct_root(g.pow(3), n11, key(f, {4, 2, 1}), 3);
    Matrix expected(f, 3, 3);
    expected = diag_mat(f, {4, 2, 1});
    expected(0, 2) = Scalar::fp(5, 4);
    expected(1, 2) = Scalar::fp(5, 4);
    CHECK(y == expected);
    CHECK(y.pow(3) == g.pow(3) * n11);

    // Heisenberg over Q: square root of the all-ones unitriangular matrix
    TriangularGroup hq = heis_q();
    RootsEngine heng(hq, SeriesStrategy::Superdiagonal);
    Field q = hq.field();
    Matrix n(q, 3, 3);
    n = Matrix::identity(q, 3);
    n(0, 1) = Scalar::one(q);
    n(1, 2) = Scalar::one(q);
    n(0, 2) = Scalar::one(q);
    ClassKey triv = heng.quotient().project(Matrix::identity(q, 3));
    Matrix yq = heng.construct_root(Matrix::identity(q, 3), n, triv, 2);
    CHECK(yq(0, 1) == Scalar::rational(1, 2));
    CHECK(yq(1, 2) == Scalar::rational(1, 2));
    CHECK(yq(0, 2) == Scalar::rational(3, 8));
    CHECK(yq.pow(2) == n);

    // zero-defect path: the lift of b is already the root
    Matrix lift = eng.quotient().lift_class(key(f, {4, 2, 1}));
    Matrix y0 = eng.construct_root(lift.pow(3), Matrix::identity(f, 3), key(f, {4, 2, 1}), 3);
    CHECK(y0 == lift);
}

TEST_CASE("construct_root rejects inadmissible candidates loudly") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    Field f = ctx.field();
    const Matrix& g = ctx.generators()[0];
    // (4,2,1) is a square root class of (1,4,1) but fails the fixed-space test
    CHECK_THROWS_AS(
        (void)eng.construct_root(g.pow(2), Matrix::identity(f, 3), key(f, {4, 2, 1}), 2),
        precondition_error);
    CHECK_THROWS_AS(
        (void)eng.construct_root(g.pow(3), diag_mat(f, {2, 2, 2}), key(f, {4, 2, 1}), 3),
        precondition_error);
}

TEST_CASE("fixed_point_conjugator solves the twisted conjugation") {
    TriangularGroup ctx = g5_merged();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    Field f = ctx.field();
    const Matrix& x = ctx.generators()[0]; // layer action diag(4,2)

    Vec v{Scalar::fp(5, 1), Scalar::fp(5, 1)};
    Vec w = eng.fixed_point_conjugator(x, v, 0);
    CHECK(w == Vec{Scalar::fp(5, 2), Scalar::fp(5, 3)});
    // group-level identity: n_w * x * n_w^-1 = x * n_v
    Matrix nw = eng.series().lift_from_layer(0, w);
    Matrix nv = eng.series().lift_from_layer(0, v);
    CHECK(nw * x * *inverse(nw) == x * nv);

    CHECK(eng.fixed_point_conjugator(x, vec_zero(f, 2), 0) == vec_zero(f, 2));

    // x^4 acts trivially on the layer: the fixed space is everything
    CHECK_THROWS_AS((void)eng.fixed_point_conjugator(x.pow(4), v, 0), precondition_error);
}

TEST_CASE("obstruction subspace on the merged layer") {
    TriangularGroup ctx = g5_merged();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    Field f = ctx.field();
    const Matrix& g = ctx.generators()[0];
    ClassKey b = key(f, {4, 1, 2, 1});

    ObstructionSubspace obs = eng.obstruction_subspace(g.pow(2), b, 0, 2);
    // Im(base action - I) = span{e2}, the quotient line carries b as the scalar 4
    CHECK(obs.im_a_minus_i.dim() == 1);
    CHECK(obs.im_a_minus_i.basis()[0] == Vec{Scalar::fp(5, 0), Scalar::fp(5, 1)});
    CHECK(obs.fix_b_quotient_lift.dim() == 0);
    CHECK(obs.subspace == obs.im_a_minus_i);
    CHECK(obs.im_correction == obs.subspace);

    // precondition: equal fixed spaces are excluded
    CHECK_THROWS_AS((void)eng.obstruction_subspace(g.pow(4), key(f, {1, 1, 1, 1}), 0, 4),
                    precondition_error);
}

TEST_CASE("obstruction subspace degenerates to zero on a root-of-unity line") {
    // 1-dim layer, a trivial, b acting by 4 = -1 with k = 2
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    Field f = ctx.field();
    const Matrix& g = ctx.generators()[0];
    ObstructionSubspace obs = eng.obstruction_subspace(g.pow(2), key(f, {4, 2, 1}), 1, 2);
    CHECK(obs.im_a_minus_i.dim() == 0);
    CHECK(obs.subspace.dim() == 0);
    CHECK(obs.im_correction.dim() == 0); // 1 + 4 = 0 on that line
}

TEST_CASE("reachability: oracle-found solutions stay inside the correction image") {
    TriangularGroup ctx = g5_merged();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    EnumeratedGroup e = enumerate_group(ctx, 1000000);
    Field f = ctx.field();
    const Matrix& g = ctx.generators()[0];
    Matrix x = g.pow(2);
    ClassKey b = key(f, {4, 1, 2, 1});
    CorrectionOperator th = eng.correction_operator(b, 0, 2);
    Subspace im = image(th.matrix);
    ObstructionSubspace obs = eng.obstruction_subspace(x, b, 0, 2);
    CHECK(obs.subspace.contains(im));
    int found = 0;
    for (const Matrix& y : e.elements) {
        if (!(eng.quotient().project(y) == b)) continue;
        Matrix pw = y.pow(2);
        Matrix v = *inverse(x) * pw;
        if (!ctx.unipotent_membership(v)) continue;
        ++found;
        CHECK(im.contains(eng.series().layer_coords(0, v)));
    }
    CHECK(found > 0);
}

TEST_CASE("pk_regularity on the running example") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    const Matrix& g = ctx.generators()[0];

    RegularityReport r2 = eng.pk_regularity(g, 2);
    CHECK_FALSE(r2.regular);
    CHECK(r2.gcds[1].str() == "x + 1"); // eigenvalue 4 = -1 on the (1,3) line

    RegularityReport r3 = eng.pk_regularity(g, 3);
    CHECK(r3.regular);
    for (const auto& gc : r3.gcds) CHECK(gc.is_one());

    RegularityReport ru = eng.pk_regularity(ctx.generators()[1], 4);
    CHECK(ru.regular);
}

TEST_CASE("correction singularity law against the cyclotomic gcd") {
    std::vector<TriangularGroup> ctxs;
    ctxs.push_back(g5());
    ctxs.push_back(g5_merged());
    for (const auto& ctx : ctxs) {
        RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
        for (long m = 0; m < 4; ++m) {
            ClassKey b = eng.quotient().project(ctx.generators()[0].pow(m));
            for (long k = 1; k <= 6; ++k) {
                if (k % 5 == 0) continue;
                Poly cyc = Poly::ones_sum(ctx.field(), k);
                for (int j = 0; j < eng.series().length(); ++j) {
                    CorrectionOperator t = eng.correction_operator(b, j, k);
                    Poly cp = char_poly(t.action);
                    bool gcd_trivial = poly_gcd(cp, cyc).is_one();
                    CHECK(t.det.is_zero() == !gcd_trivial);
                }
            }
        }
    }
}

TEST_CASE("split-product identity on abelian layers, 200 randomized triples") {
    std::mt19937_64 rng(424242);
    TriangularGroup m5 = g5_merged();
    RootsEngine eng5(m5, SeriesStrategy::Superdiagonal);

    Field q = Field::Q();
    GroupSpec qm;
    qm.field = q;
    qm.dim = 4;
    qm.generators = {diag_mat(q, {2, 1, 3, 1}), elem_mat(q, 4, 0, 1), elem_mat(q, 4, 2, 3)};
    qm.lie_algebra = {elem_mat(q, 4, 0, 1) - Matrix::identity(q, 4),
                      elem_mat(q, 4, 2, 3) - Matrix::identity(q, 4)};
    TriangularGroup mq = TriangularGroup::validate(qm);
    RootsEngine engq(mq, SeriesStrategy::Superdiagonal);

    for (int iter = 0; iter < 200; ++iter) {
        bool finite = iter % 2 == 0;
        const TriangularGroup& ctx = finite ? m5 : mq;
        const RootsEngine& eng = finite ? eng5 : engq;
        long m = long(rng() % 5);
        long k = 1 + long(rng() % 6);
        if (finite && k % 5 == 0) k = 4;
        Matrix g = ctx.generators()[0].pow(m);
        ClassKey b = eng.quotient().project(g);
        Vec w;
        if (finite) {
            w = {Scalar::fp(5, long(rng() % 5)), Scalar::fp(5, long(rng() % 5))};
        } else {
            w = {Scalar::rational(long(rng() % 9) - 4, 1 + long(rng() % 4)),
                 Scalar::rational(long(rng() % 9) - 4, 1 + long(rng() % 4))};
        }
        CorrectionOperator th = eng.correction_operator(b, 0, k);
        Matrix lhs = (g * eng.series().lift_from_layer(0, w)).pow(k);
        Matrix rhs = g.pow(k) * eng.series().lift_from_layer(0, th.matrix.apply(w));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("group surjectivity per k on the running example") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    SurjectivityReport s3 = eng.group_pk_surjective(3);
    CHECK(s3.surjective);
    SurjectivityReport s2 = eng.group_pk_surjective(2);
    CHECK_FALSE(s2.surjective);
    REQUIRE(s2.first_failing.has_value());
    CHECK(*s2.first_failing == key(ctx.field(), {1, 4, 1}));

    Field f3 = Field::Fp(3);
    GroupSpec triv;
    triv.field = f3;
    triv.dim = 2;
    triv.generators = {};
    TriangularGroup tctx = TriangularGroup::validate(triv);
    RootsEngine teng(tctx, SeriesStrategy::Superdiagonal);
    for (long k = 1; k <= 6; ++k) {
        if (k % 3 == 0) continue;
        CHECK(teng.group_pk_surjective(k).surjective);
    }
}

TEST_CASE("group surjectivity is unsupported on infinite class spaces") {
    Field q = Field::Q();
    GroupSpec spec;
    spec.field = q;
    spec.dim = 2;
    spec.generators = {diag_mat(q, {6, 1}), elem_mat(q, 2, 0, 1)};
    spec.lie_algebra = {elem_mat(q, 2, 0, 1) - Matrix::identity(q, 2)};
    TriangularGroup ctx = TriangularGroup::validate(spec);
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    CHECK_THROWS_AS((void)eng.group_pk_surjective(2), unsupported_error);

    // sign-only class group is finite and supported
    GroupSpec sgn;
    sgn.field = q;
    sgn.dim = 2;
    sgn.generators = {diag_mat(q, {-1, 1}), elem_mat(q, 2, 0, 1)};
    sgn.lie_algebra = {elem_mat(q, 2, 0, 1) - Matrix::identity(q, 2)};
    TriangularGroup sctx = TriangularGroup::validate(sgn);
    RootsEngine seng(sctx, SeriesStrategy::Superdiagonal);
    SurjectivityReport rep = seng.group_pk_surjective(3);
    CHECK(rep.surjective); // odd powers reach both sign classes
    CHECK_FALSE(seng.group_pk_surjective(2).surjective);
}

TEST_CASE("center surjectivity on the corpus examples") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    EnumeratedGroup e = enumerate_group(ctx, 1000000);
    for (long k : {1L, 2L, 3L, 4L, 6L}) CHECK(eng.center_pk_surjective(e, k));

    Field f7 = Field::Fp(7);
    GroupSpec heis;
    heis.field = f7;
    heis.dim = 3;
    heis.generators = {elem_mat(f7, 3, 0, 1), elem_mat(f7, 3, 1, 2)};
    TriangularGroup hctx = TriangularGroup::validate(heis);
    RootsEngine heng(hctx, SeriesStrategy::Superdiagonal);
    EnumeratedGroup he = enumerate_group(hctx, 1000000);
    CHECK(heng.center_pk_surjective(he, 2));
    CHECK(heng.center_pk_surjective(he, 1));
}

TEST_CASE("center-of-centralizer roots match the coset decision") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    EnumeratedGroup e = enumerate_group(ctx, 1000000);
    const Matrix& g = ctx.generators()[0];

    auto none = eng.center_of_centralizer_root(e, g.pow(2), 2);
    CHECK_FALSE(none.has_value());
    CHECK_FALSE(eng.coset_root_decision(g.pow(2), 2).decision);

    auto some = eng.center_of_centralizer_root(e, g.pow(3), 3);
    REQUIRE(some.has_value());
    CHECK(some->pow(3) == g.pow(3));
    CHECK(eng.coset_root_decision(g.pow(3), 3).decision);

    auto idroot = eng.center_of_centralizer_root(e, Matrix::identity(ctx.field(), 3), 4);
    REQUIRE(idroot.has_value());
    CHECK(idroot->is_identity());

    // non-diagonal elements are rejected as unsupported
    CHECK_THROWS_AS((void)eng.center_of_centralizer_root(e, g * ctx.generators()[1], 2),
                    unsupported_error);
}

TEST_CASE("multi_k_probe distinguishes element from coset membership") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    EnumeratedGroup e = enumerate_group(ctx, 1000000);
    const Matrix& g = ctx.generators()[0];

    auto res = eng.multi_k_probe(g.pow(2), {2, 3}, &e);
    CHECK(res.at(2) == ProbeResult::InImage); // g^2 is a square
    CHECK(res.at(3) == ProbeResult::InImage);
    CHECK_FALSE(eng.coset_root_decision(g.pow(2), 2).decision); // but the coset is not covered

    auto res2 = eng.multi_k_probe(g.pow(2) * ctx.generators()[1], {2}, &e);
    CHECK(res2.at(2) == ProbeResult::NotInImage);

    auto res3 = eng.multi_k_probe(Matrix::identity(ctx.field(), 3), {1, 2, 3, 4, 6}, &e);
    for (const auto& [k, r] : res3) CHECK(r == ProbeResult::InImage);
}

TEST_CASE("multi_k_probe decides characteristic-0 single-layer cases") {
    Field q = Field::Q();
    GroupSpec spec;
    spec.field = q;
    spec.dim = 2;
    spec.generators = {diag_mat(q, {-2, 2}), elem_mat(q, 2, 0, 1)};
    spec.lie_algebra = {elem_mat(q, 2, 0, 1) - Matrix::identity(q, 2)};
    TriangularGroup ctx = TriangularGroup::validate(spec);
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    const Matrix g = ctx.generators()[0];

    // g^2 = diag(4,4) is a square even though its coset is not covered
    CHECK_FALSE(eng.coset_root_decision(g.pow(2), 2).decision);
    auto yes = eng.multi_k_probe(g.pow(2), {2}, nullptr);
    CHECK(yes.at(2) == ProbeResult::InImage);

    // g^2 * n(1) is unreachable: the correction operator vanishes over the only root class
    Matrix xn = g.pow(2) * ctx.generators()[1];
    auto no = eng.multi_k_probe(xn, {2}, nullptr);
    CHECK(no.at(2) == ProbeResult::NotInImage);

    // a class with no k-th roots at all
    auto empty = eng.multi_k_probe(g, {2}, nullptr);
    CHECK(empty.at(2) == ProbeResult::NotInImage);
}

TEST_CASE("series invariance of decisions on mixed corpus samples") {
    for (const GroupSpec& spec : corpus::finite_corpus()) {
        if (spec.name != "g5" && spec.name != "merged_p5" && spec.name != "heisdiag_p3") continue;
        TriangularGroup ctx = TriangularGroup::validate(spec);
        RootsEngine sup(ctx, SeriesStrategy::Superdiagonal);
        RootsEngine ref(ctx, SeriesStrategy::Refined);
        for (const ClassKey& cls : sup.quotient().all_classes()) {
            Matrix x = sup.quotient().lift_class(cls);
            for (long k = 1; k <= 6; ++k) {
                if (ctx.field().characteristic() != 0 && k % ctx.field().characteristic() == 0)
                    continue;
                CHECK(sup.coset_root_decision(x, k).decision ==
                      ref.coset_root_decision(x, k).decision);
            }
        }
    }
}

TEST_CASE("witness roots exist for every unipotent translate of a covered coset") {
    TriangularGroup ctx = g5();
    RootsEngine eng(ctx, SeriesStrategy::Superdiagonal);
    Field f = ctx.field();
    const Matrix& g = ctx.generators()[0];
    Certificate cert = eng.coset_root_decision(g.pow(3), 3);
    REQUIRE(cert.decision);
    for (const Matrix& n : ctx.unipotent_elements()) {
        Matrix y = eng.construct_root(g.pow(3), n, *cert.witness, 3);
        CHECK(y.pow(3) == g.pow(3) * n);
        CHECK(eng.quotient().project(y) == *cert.witness);
    }
    (void)f;
}
