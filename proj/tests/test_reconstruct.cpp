#include "doctest.h"
#include "support.hpp"

using namespace coendforge;
using namespace coendforge::testing;

namespace {

Coalgebra trivial_coalgebra(Field f) {
    return Coalgebra{SpaceObject::standard(1, "1"), Matrix::identity(f, 1), Matrix::identity(f, 1)};
}

// Corrupted: x0 |-> x0 ⊗ (g0 + g1) is not coassociative.
Comodule corrupted_pair(Field f) {
    Comodule m = graded_comodule(f, 2, {0, 1});
    m.coaction.ref(0 * 2 + 1, 0) = 1;
    return m;
}

std::size_t count_degree(const std::vector<std::size_t>& degrees, std::size_t g) {
    return static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), g));
}

void require_round_trip(const Reconstruction& rec, const Coalgebra& c) {
    REQUIRE(rec.verdict == ReconstructionVerdict::Generated);
    CHECK(minor_rank(rec.h) == c.dim());
    CHECK(c.comultiplication * rec.h == kron(rec.h, rec.h) * rec.coend.coalgebra.comultiplication);
    CHECK(c.counit * rec.h == rec.coend.coalgebra.counit);
    const Matrix hinv = inverse(rec.h);
    CHECK(kron(hinv, hinv) * c.comultiplication * rec.h == rec.coend.coalgebra.comultiplication);
}

}  // namespace

TEST_CASE("comodule category over the ground field has End = K") {
    const Field f = Field::rational();
    ComoduleCategory cat =
        comodule_category_of(trivial_coalgebra(f), {Comodule{SpaceObject::standard(1, "x"), Matrix::identity(f, 1)}});
    REQUIRE(cat.objects.size() == 1);
    const auto& end = cat.hom.at({0, 0});
    REQUIRE(end.size() == 1);
    CHECK(is_invertible(end[0]));
    CHECK(check_comodule_category(cat).ok());
}

TEST_CASE("graded lines over K[Z/2] have no morphisms between different degrees") {
    const Field f = Field::rational();
    HopfAlgebra h = group_algebra(f, cyclic_table(2));
    ComoduleCategory cat = comodule_category_of(h.coalgebra(), {graded_comodule(f, 2, {0}), graded_comodule(f, 2, {1})},
                                                {"K0", "K1"});
    CHECK(cat.hom.at({0, 1}).empty());
    CHECK(cat.hom.at({1, 0}).empty());
    CHECK(cat.hom.at({0, 0}).size() == 1);
    CHECK(cat.hom.at({1, 1}).size() == 1);
    CHECK(check_comodule_category(cat).ok());
}

TEST_CASE("standard comodule of the comatrix coalgebra is simple") {
    const Field f = Field::rational();
    ComoduleCategory cat = comodule_category_of(comatrix(f, 2), {standard_comodule(f, 2)});
    const auto& end = cat.hom.at({0, 0});
    REQUIRE(end.size() == 1);
    CHECK(end[0](0, 1) == 0);
    CHECK(end[0](1, 0) == 0);
    CHECK(end[0](0, 0) == end[0](1, 1));
}

TEST_CASE("hom dimensions between graded comodules count matching degrees") {
    std::mt19937_64 rng(41);
    const Field f = Field::prime(5);
    const std::size_t order = 3;
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 3), deg(0, order - 1);
        std::vector<std::size_t> dv(dim(rng)), dw(dim(rng));
        for (auto& d : dv) d = deg(rng);
        for (auto& d : dw) d = deg(rng);
        // A random change of basis keeps the hom dimension.
        Comodule v = graded_comodule(f, order, dv);
        const Matrix p = random_invertible(rng, f, dv.size());
        v.coaction = kron(p, Matrix::identity(f, order)) * v.coaction * inverse(p);
        const Comodule w = graded_comodule(f, order, dw);
        std::size_t expected = 0;
        for (std::size_t g = 0; g < order; ++g) expected += count_degree(dv, g) * count_degree(dw, g);
        auto basis = comodule_morphisms(v, w, order);
        CHECK(basis.size() == expected);
        for (const auto& g : basis) CHECK(is_comodule_morphism(g, v, w, order));
    }
}

TEST_CASE("composition in a comodule category is expressed in the hom basis") {
    const Field f = Field::rational();
    const Coalgebra c = triangular_coalgebra(f);
    ComoduleCategory cat =
        comodule_category_of(c, {triangular_line(f, 0), triangular_standard(f), triangular_line(f, 1)}, {"S0", "V", "S1"});
    REQUIRE(cat.hom.at({0, 1}).size() == 1);  // inclusion of the socle
    REQUIRE(cat.hom.at({1, 2}).size() == 1);  // projection to the top
    CHECK(cat.hom.at({0, 2}).empty());
    CHECK(cat.hom.at({1, 0}).empty());
    CHECK(cat.hom.at({2, 1}).empty());
    // The composite S0 -> V -> S1 vanishes, so every coefficient in the (empty) basis is absent.
    CHECK(cat.compose(0, 1, 2, 0, 0).empty());
    CHECK((cat.hom.at({1, 2})[0] * cat.hom.at({0, 1})[0]).is_zero());
    CHECK(check_comodule_category(cat).ok());
}

TEST_CASE("seeded morphism that does not intertwine is reported") {
    const Field f = Field::rational();
    ComoduleCategory cat = comodule_category_of(group_algebra(f, cyclic_table(2)).coalgebra(),
                                                {graded_comodule(f, 2, {0}), graded_comodule(f, 2, {1})});
    cat.hom[{0, 1}].push_back(Matrix::identity(f, 1));
    CHECK_FALSE(check_comodule_category(cat).ok());
}

TEST_CASE("K[Z/2] is reconstructed from its two graded lines") {
    const Field f = Field::rational();
    HopfAlgebra h = group_algebra(f, cyclic_table(2));
    Reconstruction rec =
        reconstruct_coalgebra(h.coalgebra(), {graded_comodule(f, 2, {0}), graded_comodule(f, 2, {1})}, {"K0", "K1"});
    CHECK(rec.coend.dim() == 2);
    require_round_trip(rec, h.coalgebra());
    // Each seed's generator goes to its grouplike.
    CHECK(rec.h * rec.coend.injections[0] == Matrix::from_rows(f, {{1}, {0}}));
    CHECK(rec.h * rec.coend.injections[1] == Matrix::from_rows(f, {{0}, {1}}));
    CHECK(to_string(rec.verdict) == "generated");
}

TEST_CASE("comatrix coalgebra is reconstructed from the standard comodule") {
    const Field f = Field::rational();
    const Coalgebra c = comatrix(f, 2);
    Reconstruction rec = reconstruct_coalgebra(c, {standard_comodule(f, 2)});
    CHECK(rec.coend.dim() == 4);
    require_round_trip(rec, c);
    // cohom(K², K²) maps onto the comatrix basis by coact(ρ), which is the identity here.
    CHECK(rec.h * rec.coend.injections[0] == Matrix::identity(f, 4));
}

TEST_CASE("a single graded line does not generate K[Z/2]") {
    const Field f = Field::rational();
    HopfAlgebra h = group_algebra(f, cyclic_table(2));
    Reconstruction rec = reconstruct_coalgebra(h.coalgebra(), {graded_comodule(f, 2, {0})});
    CHECK(minor_rank(rec.h) == 1);
    CHECK_FALSE(rec.surjective);
    CHECK(rec.verdict == ReconstructionVerdict::NotGenerated);
    CHECK(to_string(rec.verdict) == "not_generated");
}

TEST_CASE("triangular coalgebra needs the socle among the seeds") {
    const Field f = Field::rational();
    const Coalgebra c = triangular_coalgebra(f);
    REQUIRE(check_coalgebra(c).ok());

    // With V alone, Q = cohom(V, V) is four-dimensional and maps onto C.
    Reconstruction alone = reconstruct_coalgebra(c, {triangular_standard(f)});
    CHECK(alone.coend.dim() == 4);
    CHECK(alone.surjective);
    CHECK_FALSE(alone.injective);
    CHECK(alone.verdict == ReconstructionVerdict::NotIsomorphic);

    // The inclusion of S0 kills the lower-left coefficient.
    Reconstruction with_socle = reconstruct_coalgebra(c, {triangular_standard(f), triangular_line(f, 0)});
    CHECK(with_socle.coend.dim() == 3);
    require_round_trip(with_socle, c);
}

TEST_CASE("reconstructed multiplication matches the group algebra") {
    SUBCASE("Z/2 over Q") {
        const Field f = Field::rational();
        HopfAlgebra h = group_algebra(f, cyclic_table(2));
        Reconstruction rec = reconstruct_hopf(h, {graded_comodule(f, 2, {0}), graded_comodule(f, 2, {1})});
        require_round_trip(rec, h.coalgebra());
        CHECK(rec.multiplication_transported.value());
        CHECK(rec.antipode_transported.value());
        CHECK(check_bialgebra(*rec.bialgebra).ok());
        CHECK(check_hopf(*rec.hopf).ok());
    }
    SUBCASE("Z/3 over F_2") {
        const Field f = Field::prime(2);
        HopfAlgebra h = group_algebra(f, cyclic_table(3));
        Reconstruction rec = reconstruct_hopf(
            h, {graded_comodule(f, 3, {0}), graded_comodule(f, 3, {1}), graded_comodule(f, 3, {2})});
        require_round_trip(rec, h.coalgebra());
        CHECK(rec.multiplication_transported.value());
        CHECK(rec.antipode_transported.value());
    }
    SUBCASE("S_3 over Q") {
        const Field f = Field::rational();
        HopfAlgebra h = group_algebra(f, symmetric3_table());
        std::vector<Comodule> seeds;
        for (std::size_t g = 0; g < 6; ++g) seeds.push_back(graded_comodule(f, 6, {g}));
        Reconstruction rec = reconstruct_hopf(h, seeds);
        require_round_trip(rec, h.coalgebra());
        CHECK(rec.multiplication_transported.value());
        CHECK(rec.antipode_transported.value());
        // Non-commutativity survives: m_Q ∘ swap differs from m_Q.
        CHECK_FALSE(rec.bialgebra->multiplication * swap_matrix(f, 6, 6) == rec.bialgebra->multiplication);
    }
}

TEST_CASE("functions on Z/3 over F_7 are reconstructed from the three characters") {
    const Field f = Field::prime(7);
    HopfAlgebra h = function_algebra(f, cyclic_table(3));
    REQUIRE(check_hopf(h).ok());
    // 2 is a primitive cube root of unity mod 7.
    std::vector<Comodule> seeds{character_comodule(f, {1, 1, 1}), character_comodule(f, {1, 2, 4}),
                                character_comodule(f, {1, 4, 2})};
    Reconstruction rec = reconstruct_hopf(h, seeds, {"chi0", "chi1", "chi2"});
    require_round_trip(rec, h.coalgebra());
    CHECK(rec.category.tensor->object_tensor.at({1, 1}) == 2);
    CHECK(rec.category.tensor->object_tensor.at({1, 2}) == 0);
    CHECK(rec.category.duals->dual_of.at(1) == 2);
    CHECK(rec.multiplication_transported.value());
    CHECK(rec.antipode_transported.value());
}

TEST_CASE("monoidal reconstruction needs seeds closed under tensor products") {
    const Field f = Field::rational();
    HopfAlgebra h = group_algebra(f, cyclic_table(3));
    CHECK_THROWS_AS(reconstruct_bialgebra(h.bialgebra, {graded_comodule(f, 3, {0}), graded_comodule(f, 3, {1})}),
                    MissingStructure);
}

TEST_CASE("dual comodule of a graded line has the inverse degree") {
    const Field f = Field::rational();
    HopfAlgebra h = group_algebra(f, symmetric3_table());
    const auto table = symmetric3_table();
    for (std::size_t g = 0; g < 6; ++g) {
        const Comodule d = dual_comodule(graded_comodule(f, 6, {g}), h);
        REQUIRE(check_comodule(d, h.coalgebra()).ok());
        std::size_t inv = 0;
        while (table[g][inv] != 0) ++inv;
        CHECK(d.coaction == graded_comodule(f, 6, {inv}).coaction);
    }
}

TEST_CASE("find_invertible searches combinations") {
    const Field f = Field::prime(3);
    // Neither basis element is invertible, their sum is.
    const Matrix a = Matrix::from_rows(f, {{1, 0}, {0, 0}});
    const Matrix b = Matrix::from_rows(f, {{0, 0}, {0, 1}});
    auto found = find_invertible({a, b});
    REQUIRE(found.has_value());
    CHECK(is_invertible(*found));
    CHECK_FALSE(find_invertible({a}).has_value());
    CHECK_FALSE(find_invertible({}).has_value());

    const Field q = Field::rational();
    auto over_q = find_invertible({Matrix::from_rows(q, {{1, 0}, {0, 0}}), Matrix::from_rows(q, {{0, 0}, {0, 1}})});
    REQUIRE(over_q.has_value());
    CHECK(is_invertible(*over_q));
}

TEST_CASE("recognition lifts every morphism to a coend comodule map") {
    const Field f = Field::rational();
    SUBCASE("chain") {
        DiagramFunctor fun = chain_functor(f, 2, 3, 2, Matrix::from_rows(f, {{1, 0}, {0, 1}, {1, 1}}),
                                           Matrix::from_rows(f, {{1, 0, -1}, {0, 1, 2}}));
        Recognition r = recognition_factorization(fun);
        CHECK(r.ok());
        REQUIRE(r.objects.size() == 3);
        for (std::size_t x = 0; x < 3; ++x) {
            CHECK(r.objects[x].carrier == fun.representation().spaces[x]);
            CHECK(check_comodule(r.objects[x], r.coend.coalgebra).ok());
        }
        for (const auto& a : fun.representation().arrows)
            CHECK(is_comodule_morphism(a.value, r.objects[a.dom], r.objects[a.cod], r.coend.dim()));
    }
    SUBCASE("discrete points give grouplike lines") {
        DiagramFunctor fun("F", discrete_category(3), f, std::vector<SpaceObject>(3, SpaceObject::unit()), {});
        Recognition r = recognition_factorization(fun);
        REQUIRE(r.coend.dim() == 3);
        for (std::size_t x = 0; x < 3; ++x) {
            Matrix e(f, 3, 1);
            e.ref(x, 0) = 1;
            CHECK(r.objects[x].coaction == e);
            CHECK(r.coend.coalgebra.comultiplication * e == kron(e, e));
        }
    }
    SUBCASE("forgetful functor of a comodule category") {
        HopfAlgebra h = group_algebra(f, cyclic_table(2));
        ComoduleCategory cat = comodule_category_of(
            h.coalgebra(), {graded_comodule(f, 2, {0}), graded_comodule(f, 2, {1}), graded_comodule(f, 2, {0, 1})});
        Recognition r = recognition_factorization(cat.representation());
        CHECK(r.ok());
        for (std::size_t x = 0; x < cat.objects.size(); ++x) CHECK(r.objects[x].carrier == cat.objects[x].carrier);
    }
}

TEST_CASE("recognition on a glued pair gives one line") {
    const Field f = Field::rational();
    Representation rep{f, {"a", "b"}, {SpaceObject::unit(), SpaceObject::unit()}, {}};
    rep.arrows.push_back({"f", 0, 1, Matrix::identity(f, 1)});
    Recognition r = recognition_factorization(rep);
    CHECK(r.ok());
    CHECK(r.coend.dim() == 1);
}

TEST_CASE("equivalence check over K[Z/2]") {
    const Field f = Field::rational();
    HopfAlgebra h = group_algebra(f, cyclic_table(2));
    Reconstruction rec =
        reconstruct_coalgebra(h.coalgebra(), {graded_comodule(f, 2, {0}), graded_comodule(f, 2, {1})}, {"K0", "K1"});
    EquivalenceVerdict v = equivalence_check(rec, {regular_comodule(h.coalgebra()), graded_comodule(f, 2, {0, 1})},
                                             {"regular", "K0+K1"});
    CHECK(v.ok());
    REQUIRE(v.probes.size() == 2);
    CHECK(v.probes[0].lift == "kernel");
    CHECK(v.probes[1].equalizer_ok);
    // Seeds then probes; Hom(K0 ⊕ K1, K0 ⊕ K1) = K².
    REQUIRE(v.objects.size() == 4);
    CHECK(v.hom_dims_c[3][3] == 2);
    CHECK(v.hom_dims_c[2][3] == 2);
    CHECK(v.hom_dims_c[0][3] == 1);
    CHECK(v.hom_dims_c == v.hom_dims_q);

    EquivalenceVerdict bad = equivalence_check(rec, {corrupted_pair(f)}, {"corrupt"});
    REQUIRE(bad.probes.size() == 1);
    CHECK_FALSE(bad.probes[0].valid);
    CHECK_FALSE(bad.ok());
    CHECK(bad.objects.size() == 2);
}

TEST_CASE("equivalence check over the comatrix coalgebra") {
    const Field f = Field::rational();
    const Coalgebra c = comatrix(f, 2);
    Reconstruction rec = reconstruct_coalgebra(c, {standard_comodule(f, 2)}, {"V"});
    const Comodule v2 = direct_sum_comodule({standard_comodule(f, 2), standard_comodule(f, 2)}, 4);
    EquivalenceVerdict v = equivalence_check(rec, {regular_comodule(c), v2}, {"regular", "V+V"});
    CHECK(v.ok());
    // The regular comodule is V ⊕ V, so End has dimension 4.
    CHECK(v.hom_dims_c[1][1] == 4);
    CHECK(v.hom_dims_c[0][1] == 2);
    CHECK(v.hom_dims_c == v.hom_dims_q);
}

TEST_CASE("equivalence check lifts quotients through cokernels") {
    const Field f = Field::rational();
    const Coalgebra c = triangular_coalgebra(f);
    Reconstruction rec = reconstruct_coalgebra(c, {triangular_standard(f), triangular_line(f, 0)}, {"V", "S0"});
    REQUIRE(rec.verdict == ReconstructionVerdict::Generated);
    EquivalenceVerdict v = equivalence_check(rec, {triangular_line(f, 1), regular_comodule(c)}, {"S1", "regular"});
    CHECK(v.ok());
    CHECK(v.probes[0].lift == "cokernel");
    CHECK(v.probes[1].lift == "cokernel");
    CHECK(v.hom_dims_c == v.hom_dims_q);
}

TEST_CASE("equivalence check is negative without an isomorphic reconstruction") {
    const Field f = Field::rational();
    HopfAlgebra h = group_algebra(f, cyclic_table(2));
    Reconstruction rec = reconstruct_coalgebra(h.coalgebra(), {graded_comodule(f, 2, {0})});
    EquivalenceVerdict v = equivalence_check(rec, {regular_comodule(h.coalgebra())});
    CHECK_FALSE(v.reconstruction_iso);
    CHECK_FALSE(v.ok());
}
