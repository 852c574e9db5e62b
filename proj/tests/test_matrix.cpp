#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "naka/matrix.hpp"

using namespace naka;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// Brute-force rank oracle for 2x2-minor checks: a matrix has rank <= 1
// iff all 2x2 minors vanish.
bool all_2x2_minors_vanish(const Matrix& m) {
    for (std::size_t i1 = 0; i1 < m.rows(); ++i1)
        for (std::size_t i2 = i1 + 1; i2 < m.rows(); ++i2)
            for (std::size_t j1 = 0; j1 < m.cols(); ++j1)
                for (std::size_t j2 = j1 + 1; j2 < m.cols(); ++j2) {
                    Scalar det = m.at(i1, j1) * m.at(i2, j2) - m.at(i1, j2) * m.at(i2, j1);
                    if (!det.is_zero()) return false;
                }
    return true;
}

Matrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, const FieldSpec& f) {
    std::uniform_int_distribution<long> d(-3, 3);
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(f, d(rng));
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
    Scalar a = Scalar::rational(mpq_class(2, 4));
    CHECK(a.str() == "1/2");  // lowest terms
    Scalar b = Scalar::rational(mpq_class(-1, 3));
    CHECK((a + b).str() == "1/6");
    CHECK((a * b).str() == "-1/6");
    CHECK(a.inverse().str() == "2");

    FieldSpec f5 = FieldSpec::prime_field(5);
    Scalar x = Scalar::residue(3, 5), y = Scalar::residue(4, 5);
    CHECK((x + y).res() == 2);
    CHECK((x * y).res() == 2);
    CHECK((x.inverse() * x).is_one());
    CHECK((-x).res() == 2);
    CHECK_THROWS(FieldSpec::prime_field(6));
    CHECK(parse_scalar(Q, "-7/2").str() == "-7/2");
    CHECK(parse_scalar(f5, "-1").res() == 4);
}

TEST_CASE("rank: identity, zero, and minor-oracle case") {
    CHECK(rank(Matrix::identity(4, Q)) == 4);
    CHECK(rank(Matrix::zero(3, 5, Q)) == 0);

    Matrix m = Matrix::from_int_rows(Q, {{1, 2}, {2, 4}});
    REQUIRE(all_2x2_minors_vanish(m));  // oracle: rank <= 1
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel_basis normal form") {
    CHECK(kernel_basis(Matrix::identity(3, Q)).cols() == 0);

    Matrix k0 = kernel_basis(Matrix::zero(2, 3, Q));
    CHECK(k0 == Matrix::identity(3, Q));

    // x0 + x1 = 0, x2 = 0; free variable x1 = 1 gives (-1, 1, 0)^T.
    Matrix m = Matrix::from_int_rows(Q, {{1, 1, 0}, {0, 0, 1}});
    Matrix k = kernel_basis(m);
    CHECK(k == Matrix::from_int_rows(Q, {{-1}, {1}, {0}}));
    CHECK((m * k).is_zero());
    CHECK(rank(k) == m.cols() - rank(m));
}

TEST_CASE("solve: particular solutions and inconsistency") {
    Matrix b = Matrix::from_int_rows(Q, {{3}, {-2}});
    CHECK(*solve(Matrix::identity(2, Q), b) == b);

    CHECK(*solve(Matrix::zero(2, 2, Q), Matrix::zero(2, 1, Q)) == Matrix::zero(2, 1, Q));

    Matrix a = Matrix::from_int_rows(Q, {{1, 2}, {3, 4}});
    Matrix rhs = Matrix::from_int_rows(Q, {{1}, {1}});
    Matrix x = *solve(a, rhs);
    CHECK(x == Matrix::from_int_rows(Q, {{-1}, {1}}));
    CHECK(a * x == rhs);

    Matrix bad_rhs = Matrix::from_int_rows(Q, {{1}, {2}});
    CHECK(!solve(Matrix::from_int_rows(Q, {{1, 1}, {1, 1}}), bad_rhs).has_value());
    CHECK_THROWS(solve(Matrix::identity(2, Q), Matrix::zero(3, 1, Q)));
}

TEST_CASE("solve exists iff rank(a) = rank([a|b]), randomized") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix a = random_int_matrix(rng, 4, 3, Q);
        Matrix b = random_int_matrix(rng, 4, 2, Q);
        auto x = solve(a, b);
        bool consistent = rank(a) == rank(hstack(a, b));
        CHECK(x.has_value() == consistent);
        if (x) CHECK(a * *x == b);
    }
}

TEST_CASE("kron: identities and bilinearity") {
    CHECK(kron(Matrix::identity(2, Q), Matrix::identity(3, Q)) == Matrix::identity(6, Q));

    Matrix m = Matrix::from_int_rows(Q, {{1, -2}, {0, 5}});
    CHECK(kron(Matrix::from_int_rows(Q, {{2}}), m) == Scalar::from_int(Q, 2) * m);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a1 = random_int_matrix(rng, 2, 2, Q), a2 = random_int_matrix(rng, 2, 2, Q);
        Matrix b1 = random_int_matrix(rng, 2, 2, Q), b2 = random_int_matrix(rng, 2, 2, Q);
        CHECK(kron(a1 * a2, b1 * b2) == kron(a1, b1) * kron(a2, b2));
    }
}

TEST_CASE("homology_dim") {
    Matrix z3 = Matrix::zero(3, 3, Q);
    CHECK(homology_dim(z3, z3) == 3);
    CHECK(homology_dim(Matrix::identity(2, Q), Matrix::zero(1, 2, Q)) == 0);

    // k -> k^2 -> k with d_in = (1,0)^T, d_out = (0,1): exact in the middle.
    Matrix d_in = Matrix::from_int_rows(Q, {{1}, {0}});
    Matrix d_out = Matrix::from_int_rows(Q, {{0, 1}});
    CHECK(homology_dim(d_in, d_out) == 0);

    CHECK_THROWS_AS(homology_dim(Matrix::identity(2, Q), Matrix::identity(2, Q)),
                    std::domain_error);
}

TEST_CASE("rank-nullity holds on random matrices over Q and F_7") {
    std::mt19937 rng(3);
    for (const FieldSpec& f : {Q, FieldSpec::prime_field(7)}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<std::size_t> dim(1, 6);
            Matrix m = random_int_matrix(rng, dim(rng), dim(rng), f);
            Matrix k = kernel_basis(m);
            CHECK(rank(m) + k.cols() == m.cols());
            CHECK((m * k).is_zero());
            if (k.cols() > 0) CHECK(rank(k) == k.cols());
        }
    }
}

TEST_CASE("quotient maps: proj/section are exact complements") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix b = random_int_matrix(rng, 5, 2, Q);
        QuotientMaps q = quotient_by_column_space(b, 5);
        CHECK((q.proj * b).is_zero());
        CHECK((q.proj * q.section).is_identity());
        CHECK(q.proj.rows() == 5 - rank(b));
    }
    // zero subspace: quotient is the identity on coordinates
    QuotientMaps q = quotient_by_column_space(Matrix::zero(3, 0, Q), 3);
    CHECK(q.proj == Matrix::identity(3, Q));
}

TEST_CASE("column_space_basis is canonical and deterministic") {
    Matrix m = Matrix::from_int_rows(Q, {{2, 4, 1}, {4, 8, 1}, {0, 0, 1}});
    Matrix b1 = column_space_basis(m);
    Matrix b2 = column_space_basis(hstack(m, m));
    CHECK(b1 == b2);  // same span, same canonical basis
    CHECK(rank(b1) == rank(m));
    CHECK(coordinates_in_basis(b1, m).rows() == b1.cols());
}

TEST_CASE("determinism: identical inputs give bit-identical outputs") {
    std::mt19937 rng(13);
    Matrix m = random_int_matrix(rng, 6, 4, Q);
    CHECK(kernel_basis(m) == kernel_basis(m));
    CHECK(rref(m).reduced == rref(m).reduced);
}
