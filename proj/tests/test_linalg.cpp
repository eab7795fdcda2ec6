#include "doctest.h"
#include "support.hpp"

using namespace coendforge;
using coendforge::testing::minor_rank;
using coendforge::testing::random_matrix;
using coendforge::testing::random_rank_matrix;

TEST_CASE("field parsing and arithmetic") {
    CHECK(Field::parse("q") == Field::rational());
    CHECK(Field::parse("fp:7") == Field::prime(7));
    CHECK(Field::parse("padic:3") == Field::padic(3));
    CHECK_THROWS(Field::parse("fp:8"));
    CHECK_THROWS(Field::parse("r"));

    Field f7 = Field::prime(7);
    CHECK(f7.from_rational(mpq_class(1, 3)) == 5);  // 3 * 5 = 15 = 1 mod 7
    CHECK(f7.inv(3) == 5);
    CHECK(f7.from_rational(-1) == 6);
    CHECK_THROWS(f7.from_rational(mpq_class(1, 7)));

    Scalar a(Field::rational(), mpq_class(3, 4));
    Scalar b(Field::prime(5), 1);
    CHECK_THROWS_AS(a + b, MixedFieldError);
    CHECK(padic_valuation(mpq_class(12, 5), 2) == 2);
    CHECK(padic_valuation(mpq_class(3, 8), 2) == -3);
}

TEST_CASE("mixed fields are rejected by matrix operations") {
    Matrix a = Matrix::identity(Field::rational(), 2);
    Matrix b = Matrix::identity(Field::prime(3), 2);
    CHECK_THROWS_AS(a * b, MixedFieldError);
    CHECK_THROWS_AS(kron(a, b), MixedFieldError);
    CHECK_THROWS_AS(a * Matrix::identity(Field::rational(), 3), ShapeError);
}

TEST_CASE("kernel and cokernel of small matrices") {
    Field q = Field::rational();
    SUBCASE("[1 1] over Q") {
        Matrix m = Matrix::from_rows(q, {{1, 1}});
        Matrix k = kernel(m);
        CHECK(k.cols() == 1);
        CHECK((m * k).is_zero());
        Cokernel c = cokernel(m);
        CHECK(c.projection.rows() == 0);
    }
    SUBCASE("zero map K -> K^2") {
        Matrix m(q, 2, 1);
        CHECK(kernel(m).cols() == 1);
        Cokernel c = cokernel(m);
        CHECK(c.projection.is_identity());
    }
    SUBCASE("column (1,1) glues two coordinates") {
        Matrix m = Matrix::from_rows(q, {{1}, {-1}});
        Cokernel c = cokernel(m);
        REQUIRE(c.projection.rows() == 1);
        CHECK((c.projection * m).is_zero());
        CHECK((c.projection * c.section).is_identity());
    }
    SUBCASE("over F_2 the matrix [1 1; 1 1] has rank 1") {
        Matrix m = Matrix::from_rows(Field::prime(2), {{1, 1}, {1, 1}});
        CHECK(rank(m) == 1);
        CHECK(kernel(m).cols() == 1);
    }
}

TEST_CASE("rank agrees with the largest nonzero minor") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 4;
        const std::size_t cols = 1 + rng() % 4;
        const std::size_t r = rng() % (std::min(rows, cols) + 1);
        Matrix m = r == 0 ? Matrix(Field::rational(), rows, cols)
                          : random_matrix(rng, Field::rational(), rows, r) *
                                random_matrix(rng, Field::rational(), r, cols);
        CHECK(rank(m) == minor_rank(m));
    }
}

TEST_CASE("kernel and cokernel invariants on random matrices") {
    std::mt19937_64 rng(12);
    for (Field f : {Field::rational(), Field::prime(2), Field::prime(5)}) {
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t rows = 1 + rng() % 5;
            const std::size_t cols = 1 + rng() % 5;
            Matrix m = random_matrix(rng, f, rows, cols);
            const std::size_t r = rank(m);
            Matrix k = kernel(m);
            CHECK(k.cols() == cols - r);
            CHECK((m * k).is_zero());
            CHECK(rank(k) == k.cols());
            Cokernel c = cokernel(m);
            CHECK(c.projection.rows() == rows - r);
            CHECK((c.projection * m).is_zero());
            CHECK((c.projection * c.section).is_identity());
            CHECK(is_surjective(c.projection));
        }
    }
}

TEST_CASE("cokernel depends only on the image") {
    std::mt19937_64 rng(13);
    Field q = Field::rational();
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = random_rank_matrix(rng, q, 5, 3, 1 + rng() % 3);
        Matrix extra = m * random_matrix(rng, q, 3, 2);
        Cokernel a = cokernel(m);
        Cokernel b = cokernel(hconcat({m, extra, Matrix(q, 5, 2)}, q, 5));
        CHECK(a.projection == b.projection);
        CHECK(a.section == b.section);
    }
}

TEST_CASE("solve_factor recovers a factor through a surjection") {
    std::mt19937_64 rng(14);
    Field q = Field::rational();
    for (int trial = 0; trial < 50; ++trial) {
        Matrix through = random_rank_matrix(rng, q, 3, 5, 3);
        Matrix psi = random_matrix(rng, q, 2, 3);
        Matrix target = psi * through;
        CHECK(solve_factor(target, through) == psi);
    }
    Matrix through = Matrix::from_rows(q, {{1, 0}});
    Matrix target = Matrix::from_rows(q, {{0, 1}});
    CHECK_THROWS_AS(solve_factor(target, through), NoSolution);
}

TEST_CASE("inverse and tensor products") {
    std::mt19937_64 rng(15);
    Field f = Field::prime(7);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a = coendforge::testing::random_invertible(rng, f, 3);
        CHECK((a * inverse(a)).is_identity());
        Matrix b = random_matrix(rng, f, 2, 3);
        Matrix c = random_matrix(rng, f, 3, 2);
        Matrix d = random_matrix(rng, f, 2, 2);
        // (a ⊗ b)(c ⊗ d) = ac ⊗ bd
        CHECK(kron(b, d) * kron(c, Matrix::identity(f, 2)) == kron(b * c, d));
    }
    CHECK_THROWS_AS(inverse(Matrix::from_rows(Field::rational(), {{1, 2}, {2, 4}})), NoSolution);
}

TEST_CASE("swap matrix exchanges tensor factors") {
    std::mt19937_64 rng(16);
    Field q = Field::rational();
    Matrix v = random_matrix(rng, q, 2, 1);
    Matrix w = random_matrix(rng, q, 3, 1);
    CHECK(swap_matrix(q, 2, 3) * kron(v, w) == kron(w, v));
}

TEST_CASE("space objects") {
    SpaceObject x({"a", "b"}, std::vector<long>{0, 1});
    SpaceObject y({"c"}, std::vector<long>{2});
    SpaceObject t = tensor(x, y);
    CHECK(t.dim() == 2);
    CHECK(t.labels()[1] == "b⊗c");
    CHECK((*t.weights())[1] == 3);
    CHECK((*dual(x).weights())[1] == -1);
    CHECK_THROWS(SpaceObject({"a", "a"}));
    CHECK_THROWS_AS(LinearMap(x, y, Matrix::identity(Field::rational(), 2)), ShapeError);
}
