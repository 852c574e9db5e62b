#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naka/algebra.hpp"
#include "test_helpers.hpp"

using namespace naka;
using namespace naka::testing;

namespace {

Algebra::Coord coord(const FieldSpec& f, std::vector<long> v) {
    Algebra::Coord c;
    for (long x : v) c.push_back(Scalar::from_int(f, x));
    return c;
}

// 2x2 upper-triangular matrices over Q: basis e11, e22, e12.
AlgebraPtr upper_triangular() {
    std::vector<std::vector<Algebra::Coord>> mult(3, std::vector<Algebra::Coord>(3));
    auto z = coord(Q, {0, 0, 0});
    for (auto& row : mult)
        for (auto& c : row) c = z;
    mult[0][0] = coord(Q, {1, 0, 0});  // e11 e11 = e11
    mult[1][1] = coord(Q, {0, 1, 0});  // e22 e22 = e22
    mult[0][2] = coord(Q, {0, 0, 1});  // e11 e12 = e12
    mult[2][1] = coord(Q, {0, 0, 1});  // e12 e22 = e12
    return from_structure_constants(Q, {"e11", "e22", "e12"}, mult, coord(Q, {1, 1, 0}));
}

}  // namespace

TEST_CASE("from_structure_constants: k, upper triangular, negative case") {
    auto k = from_structure_constants(Q, {"1"}, {{coord(Q, {1})}}, coord(Q, {1}));
    CHECK(k->dim() == 1);

    auto ut = upper_triangular();
    CHECK(ut->dim() == 3);
    // oracle: verified against literal 2x2 matrix products in the comments above

    // break associativity without touching the unit law: set e12 * e12 = e11
    std::vector<std::vector<Algebra::Coord>> bad(3, std::vector<Algebra::Coord>(3));
    for (auto& row : bad)
        for (auto& c : row) c = coord(Q, {0, 0, 0});
    bad[0][0] = coord(Q, {1, 0, 0});
    bad[1][1] = coord(Q, {0, 1, 0});
    bad[0][2] = coord(Q, {0, 0, 1});
    bad[2][1] = coord(Q, {0, 0, 1});
    bad[2][2] = coord(Q, {1, 0, 0});
    CHECK_THROWS_WITH_AS(
        from_structure_constants(Q, {"e11", "e22", "e12"}, bad, coord(Q, {1, 1, 0})),
        doctest::Contains("AssociativityViolation"), Error);
}

TEST_CASE("from_quiver: A2, cyclic rad^2, dual numbers") {
    auto a2 = from_quiver(linear_An(2), Q);
    CHECK(a2->dim() == 3);
    CHECK(a2->basis_labels() == std::vector<std::string>{"e_1", "e_2", "a1"});
    CHECK(a2->has_idempotents());

    auto cyc = from_quiver(cyclic_rad_square(3), Q);
    CHECK(cyc->dim() == 6);  // 3 idempotents + 3 arrows

    auto dn = from_quiver(poly_trunc(2), Q);
    CHECK(dn->dim() == 2);  // k[x]/(x^2): basis {e, x}
    // x * x = 0
    CHECK(dn->mult(1, 1) == coord(Q, {0, 0}));
}

TEST_CASE("from_quiver rejects inadmissible bounds and malformed relations") {
    // loop with no relations: length-2 paths never lie in the ideal
    QuiverPresentation p;
    p.vertices = {"v"};
    p.arrows.push_back({"x", "v", "v"});
    p.nilpotency_bound = 2;
    CHECK_THROWS_WITH_AS(from_quiver(p, Q), doctest::Contains("BoundTooSmall"), Error);

    // relation mixing non-parallel paths
    QuiverPresentation bad = linear_An(3);
    bad.relations.push_back({{"1", {"a2", "a1"}}, {"1", {"a1"}}});
    CHECK_THROWS_WITH_AS(from_quiver(bad, Q), doctest::Contains("MalformedRelation"), Error);
}

TEST_CASE("from_quiver: mixed-length admissible relation") {
    // two parallel arrows composed: b*a = c*a enforces a genuine quotient
    QuiverPresentation p;
    p.vertices = {"1", "2", "3"};
    p.arrows = {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "2", "3"}};
    p.relations.push_back({{"1", {"b", "a"}}, {"-1", {"c", "a"}}});
    p.nilpotency_bound = 3;
    auto alg = from_quiver(p, Q);
    // paths: e1,e2,e3, a,b,c, ba, ca with ba = ca: dim 7
    CHECK(alg->dim() == 7);
}

TEST_CASE("opposite: involution and A2 reversal") {
    auto dn = from_quiver(poly_trunc(2), Q);
    auto dn_op = opposite(dn);
    CHECK(dn_op->same_as(*dn));  // commutative algebra

    auto a2 = from_quiver(linear_An(2), Q);
    auto op = opposite(a2);
    // structure constants transpose: a1 * e_1 in op equals e_1 * a1 in a2
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(op->mult(i, j) == a2->mult(j, i));
    CHECK(opposite(op)->same_as(*a2));  // involution, bit-exact

    // the reversed presentation is itself a valid quiver presentation
    REQUIRE(op->presentation().has_value());
    auto rebuilt = from_quiver(*op->presentation(), Q);
    CHECK(rebuilt->dim() == 3);
}

TEST_CASE("tensor_algebra: unit law, dual numbers square, dimensions") {
    auto k = from_quiver(semisimple_k_n(1), Q);
    auto dn = from_quiver(poly_trunc(2), Q);
    auto t = tensor_algebra(k, dn);
    CHECK(t->same_as(*dn));  // k (x) A = A up to the canonical identification

    auto t2 = tensor_algebra(dn, dn);
    CHECK(t2->dim() == 4);
    // commutative: table symmetric
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(t2->mult(i, j) == t2->mult(j, i));
    // oracle: (x (x) x)^2 = x^2 (x) x^2 = 0; (e (x) x)(x (x) e) = x (x) x
    CHECK(t2->multiply(coord(Q, {0, 1, 0, 0}), coord(Q, {0, 0, 1, 0})) ==
          coord(Q, {0, 0, 0, 1}));

    auto a2 = from_quiver(linear_An(2), Q);
    CHECK(tensor_algebra(a2, dn)->dim() == 6);
    auto f5 = FieldSpec::prime_field(5);
    CHECK_THROWS_AS(tensor_algebra(a2, from_quiver(poly_trunc(2), f5)), Error);
}

TEST_CASE("category_algebra: point, A2 poset, cyclic complexes") {
    CategorySpec pt;
    pt.objects = {"*"};
    pt.morphisms = {{"id", "*", "*"}};
    pt.identities = {"id"};
    auto k = category_algebra(pt, Q);
    CHECK(k->dim() == 1);

    CategorySpec a2;
    a2.objects = {"1", "2"};
    a2.morphisms = {{"id1", "1", "1"}, {"id2", "2", "2"}, {"f", "1", "2"}};
    a2.identities = {"id1", "id2"};
    auto ca = category_algebra(a2, Q);
    auto qa = from_quiver(linear_An(2), Q);
    CHECK(ca->dim() == 3);
    // same structure constants as the path algebra of A2 (basis order matches)
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(ca->mult(i, j) == qa->mult(i, j));

    CategorySpec cyc;
    cyc.objects = {"c0", "c1", "c2"};
    cyc.morphisms = {{"i0", "c0", "c0"}, {"i1", "c1", "c1"}, {"i2", "c2", "c2"},
                     {"d0", "c0", "c2"}, {"d1", "c1", "c0"}, {"d2", "c2", "c1"}};
    cyc.identities = {"i0", "i1", "i2"};
    // all composites d_{i-1} o d_i vanish: compositions default to zero
    cyc.composition[{"d2", "d0"}] = {};
    cyc.composition[{"d0", "d1"}] = {};
    cyc.composition[{"d1", "d2"}] = {};
    auto cc = category_algebra(cyc, Q);
    auto qc = from_quiver(cyclic_rad_square(3), Q);
    CHECK(cc->dim() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(cc->mult(i, j) == qc->mult(i, j));
}

TEST_CASE("dual_bimodule: trivial case and action transposes") {
    auto k = from_quiver(semisimple_k_n(1), Q);
    Bimodule dk = dual_bimodule(k);
    CHECK(dk.dim == 1);
    CHECK(dk.left_action[0].is_identity());

    auto a2 = from_quiver(linear_An(2), Q);
    Bimodule d = dual_bimodule(a2);
    CHECK(d.dim == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(d.left_action[i] == transpose(a2->right_mult(i)));
        CHECK(d.right_action[i] == transpose(a2->left_mult(i)));
    }

    auto dn = from_quiver(poly_trunc(2), Q);
    Bimodule dd = dual_bimodule(dn);
    // k[x]/(x^2) is self-injective: left action of x is similar to right
    // multiplication by x on Lambda (both rank 1, square zero)
    CHECK(rank(dd.left_action[1]) == 1);
    CHECK((dd.left_action[1] * dd.left_action[1]).is_zero());
}

TEST_CASE("radical: semisimple, dual numbers, A2, trace-form route") {
    auto ss = from_quiver(semisimple_k_n(3), Q);
    CHECK(radical(ss).cols() == 0);

    auto dn = from_quiver(poly_trunc(2), Q);
    Matrix r = radical(dn);
    CHECK(r.cols() == 1);
    CHECK(r.at(1, 0).is_one());  // span{x}

    auto a2 = from_quiver(linear_An(2), Q);
    Matrix r2 = radical(a2);
    CHECK(r2.cols() == 1);
    CHECK(r2.at(2, 0).is_one());  // span{a}

    // trace-form route: same algebra without a presentation
    std::vector<std::vector<Algebra::Coord>> mult(2, std::vector<Algebra::Coord>(2));
    mult[0][0] = coord(Q, {1, 0});
    mult[0][1] = coord(Q, {0, 1});
    mult[1][0] = coord(Q, {0, 1});
    mult[1][1] = coord(Q, {0, 0});
    auto dn2 = from_structure_constants(Q, {"e", "x"}, mult, coord(Q, {1, 0}));
    Matrix r3 = radical(dn2);
    CHECK(r3.cols() == 1);

    auto f2 = FieldSpec::prime_field(2);
    std::vector<std::vector<Algebra::Coord>> m2(2, std::vector<Algebra::Coord>(2));
    m2[0][0] = coord(f2, {1, 0});
    m2[0][1] = coord(f2, {0, 1});
    m2[1][0] = coord(f2, {0, 1});
    m2[1][1] = coord(f2, {0, 0});
    auto small_char = from_structure_constants(f2, {"e", "x"}, m2, coord(f2, {1, 0}));
    CHECK_THROWS_WITH_AS(radical(small_char), doctest::Contains("UnsupportedCharacteristic"),
                         Error);
}

TEST_CASE("quiver algebras over F_p") {
    auto f2 = FieldSpec::prime_field(2);
    auto a2 = from_quiver(linear_An(2), f2);
    CHECK(a2->dim() == 3);
    CHECK(radical(a2).cols() == 1);  // presentation route, no characteristic guard
}
