#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gca/analysis.hpp"
#include "gca/constructions.hpp"
#include "gca/errors.hpp"

#include <random>

using namespace gca;

namespace {

Degree deg(std::initializer_list<int> c) {
    std::vector<int> v(c);
    return Degree::from_bits(v);
}

Element random_element(std::mt19937_64& rng, std::size_t n) {
    Vector v(n);
    for (auto& s : v) s = Scalar::rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    return Element::from_vector(v);
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
    const Scalar half = Scalar::rational(1, 2);
    CHECK((half + half).is_one());
    CHECK((Scalar::imaginary_unit() * Scalar::imaginary_unit()) == Scalar(-1));
    CHECK(Scalar::rational(2, 4) == half);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK(Scalar::parse("1/2-1 i") == Scalar(mpq_class(1, 2), mpq_class(-1)));
    CHECK(Scalar::parse("-i") == -Scalar::imaginary_unit());
    CHECK(Scalar(mpq_class(1, 2), mpq_class(3, 4)).str() == "1/2+3/4 i");
    for (const char* s : {"0", "-3/7", "i", "1/2+3/4 i", "-5 i"}) CHECK(Scalar::parse(Scalar::parse(s).str()) == Scalar::parse(s));
    CHECK(rational_sqrt(mpq_class(9, 4)) == mpq_class(3, 2));
    CHECK_FALSE(rational_sqrt(mpq_class(2)).has_value());
    const auto r = gaussian_sqrt(Scalar(-1));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar(-1));
    const auto r2 = gaussian_sqrt(Scalar::imaginary_unit() * Scalar(2));  // (1+i)^2
    REQUIRE(r2.has_value());
    CHECK(*r2 * *r2 == Scalar::imaginary_unit() * Scalar(2));
    CHECK_FALSE(gaussian_sqrt(Scalar(2)).has_value());
}

TEST_CASE("linear algebra kernels") {
    Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(rank(m) == 2);
    const Matrix ns = nullspace(m);
    REQUIRE(ns.rows() == 1);
    const Vector v = ns.row_vector(0);
    const Vector z = m.apply(v);
    for (const auto& s : z) CHECK(s.is_zero());
    // canonical subspaces compare equal however they are spanned
    const Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
    const Subspace b = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
    CHECK(a == b);
    CHECK(a.contains({3, 4, 1}));
    CHECK_FALSE(a.contains({0, 0, 1}));
    CHECK(Subspace::span(3, {}).is_zero());
    CHECK(kronecker(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
}

TEST_CASE("make_algebra accepts the quaternion data") {
    const GradedAlgebra h = quaternions();
    CHECK(h.dim() == 4);
    CHECK(h.degree(h.at("i")) == deg({0, 1, 1}));
    CHECK(h.unit() == std::size_t{0});
}

TEST_CASE("make_algebra rejects a corrupted degree and names the triple") {
    const GradedAlgebra h = quaternions();
    auto basis = h.basis();
    basis[3].degree = deg({1, 1, 1});
    try {
        GradedAlgebra::make(Field::Rational, 3, basis, h.constants(), h.form(), 0);
        FAIL("expected a grading violation");
    } catch (const GradingViolation& e) {
        // eps k = k still respects the moved degree; the first offender is i j = k
        CHECK(e.i == 1);
        CHECK(e.j == 2);
        CHECK(e.k == 3);
        CHECK(std::string(e.what()).find("(1,2,3)") != std::string::npos);
    }
}

TEST_CASE("make_algebra rejects bad units, labels and indices") {
    const GradedAlgebra h = quaternions();
    CHECK_THROWS_AS(GradedAlgebra::make(Field::Rational, 3, h.basis(), h.constants(), h.form(), 1), UnitViolation);
    try {
        GradedAlgebra::make(Field::Rational, 3, h.basis(), h.constants(), h.form(), 1);
    } catch (const UnitViolation& e) {
        CHECK(e.element == 0);
    }
    auto dup = h.basis();
    dup[2].label = "i";
    CHECK_THROWS_AS(GradedAlgebra::make(Field::Rational, 3, dup, h.constants(), h.form(), 0), SchemaError);
    CHECK_THROWS_AS(GradedAlgebra::make(Field::Rational, 3, h.basis(), {{0, 9, {}}}, h.form()), SchemaError);
    CHECK_THROWS_AS(
        GradedAlgebra::make(Field::Rational, 3, h.basis(), {{0, 0, {{0, Scalar::imaginary_unit()}}}}, h.form()),
        SchemaError);
    CHECK_THROWS_AS(GradedAlgebra::make(Field::Rational, 2, h.basis(), {}, BilinearFormZ2::scalar_product(2)),
                    DimensionError);
}

TEST_CASE("empty basis is the zero algebra") {
    const GradedAlgebra z = GradedAlgebra::make(Field::Rational, 1, {}, {}, BilinearFormZ2::scalar_product(1));
    CHECK(z.dim() == 0);
    CHECK(z.constants().empty());
}

TEST_CASE("multiply examples") {
    const GradedAlgebra h = quaternions();
    CHECK(multiply(h, h["i"], h["j"]) == h["k"]);
    const GradedAlgebra eh = extended_quaternions();
    CHECK(multiply(eh, eh["a"], eh["b"]) == eh["ε"]);
    const GradedAlgebra k = k3();
    CHECK(multiply(k, k["ε"], k["a"]) == Scalar::rational(1, 2) * k["a"]);
}

TEST_CASE("multiply is bilinear on random rational elements") {
    std::mt19937_64 rng(5);
    for (const GradedAlgebra& a : {quaternions(), extended_quaternions(), k3(), clifford(CliffordSignature::real(2, 1))}) {
        for (int t = 0; t < 20; ++t) {
            const Element x = random_element(rng, a.dim()), x2 = random_element(rng, a.dim()), y = random_element(rng, a.dim());
            const Scalar c = Scalar::rational(static_cast<long>(rng() % 7) - 3, 2);
            REQUIRE(multiply(a, x + x2, y) == multiply(a, x, y) + multiply(a, x2, y));
            REQUIRE(multiply(a, y, x + x2) == multiply(a, y, x) + multiply(a, y, x2));
            REQUIRE(multiply(a, c * x, y) == c * multiply(a, x, y));
        }
    }
}

TEST_CASE("twist examples and involution") {
    const GradedAlgebra h = quaternions();
    const Element x = h["ε"] + Scalar(2) * h["j"] - h["k"];
    CHECK(twist(h, x, Degree::zero(3)) == x);
    CHECK(twist(h, h["j"], h.degree(h.at("i"))) == Scalar(-1) * h["j"]);
    CHECK(multiply(h, h["i"], h["j"]) == multiply(h, twist(h, h["j"], h.degree(h.at("i"))), h["i"]));
    for (std::uint64_t d = 0; d < 8; ++d) CHECK(twist(h, twist(h, x, Degree(3, d)), Degree(3, d)) == x);
}

TEST_CASE("a c = twist(c, deg a) a for graded-commutative algebras") {
    std::mt19937_64 rng(9);
    for (const GradedAlgebra& a : {quaternions(), extended_quaternions(), k3(), clifford(CliffordSignature::complexified(3)),
                                   unital_extension(1, 2, 3).algebra}) {
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (int t = 0; t < 5; ++t) {
                const Element c = random_element(rng, a.dim());
                const Element ai = Element::basis(i);
                REQUIRE(multiply(a, ai, c) == multiply(a, twist(a, c, a.degree(i)), ai));
            }
    }
}

TEST_CASE("component examples") {
    const GradedAlgebra c3 = clifford(CliffordSignature::complexified(3));
    CHECK(component(c3, c3.degree(c3.at("α1"))).dim() == 1);
    CHECK(component(quaternions(), deg({1, 1, 1})).dim() == 0);
    const GradedAlgebra h = quaternions();
    CHECK(component(h, Degree::zero(3)).contains(h["ε"].to_vector(4)));
    CHECK_THROWS_AS(component(h, deg({1})), DimensionError);
}

TEST_CASE("parity_split examples") {
    const auto cl = parity_split(clifford(CliffordSignature::real(1, 2)));
    CHECK(cl.odd.empty());
    CHECK(cl.even.size() == 8);
    const auto eh = parity_split(extended_quaternions());
    CHECK(eh.even.size() == 4);
    CHECK(eh.odd.size() == 8);
    const auto k = parity_split(k3());
    CHECK(k.even.size() == 1);
    CHECK(k.odd.size() == 2);
}

TEST_CASE("parity_split under a custom form") {
    // (1,0),(0,1) even and (1,1) even as well: parity is additive, so even x even stays even
    const auto f = BilinearFormZ2::custom({{0, 1}, {1, 0}});
    std::vector<BasisVector> basis{{"x", deg({1, 0})}, {"y", deg({0, 1})}, {"z", deg({1, 1})}};
    const auto a = GradedAlgebra::make(Field::Rational, 2, basis, {{0, 1, {{2, 1}}}}, f);
    const auto s = parity_split(a);
    CHECK(s.even.size() == 3);
    CHECK(s.odd.empty());
    const auto g = BilinearFormZ2::custom({{1, 0}, {0, 0}});
    const auto b = with_form(a, g);
    CHECK(parity_split(b).odd == std::vector<std::size_t>{0, 2});
}

TEST_CASE("even_part_algebra examples") {
    const GradedAlgebra ev = even_part_algebra(extended_quaternions());
    CHECK(ev == quaternions());
    const GradedAlgebra cl = clifford(CliffordSignature::real(2, 1));
    CHECK(even_part_algebra(cl) == cl);
    const GradedAlgebra k = even_part_algebra(k3());
    CHECK(k.dim() == 1);
    CHECK(k.unit() == std::size_t{0});
}

TEST_CASE("annihilator examples") {
    const GradedAlgebra h = quaternions();
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(annihilator(h, Element::basis(i), Side::Left).is_zero());
        CHECK(annihilator(h, Element::basis(i), Side::Right).is_zero());
    }
    const GradedAlgebra c1 = clifford(CliffordSignature::complexified(1));
    const Element x = c1["ε"] + c1["α1"];
    const Subspace ann = annihilator(c1, x, Side::Right);
    CHECK(ann.dim() == 1);
    CHECK(ann.contains((c1["ε"] - c1["α1"]).to_vector(2)));
    CHECK(annihilator(h, Element(), Side::Left).is_full());
}

TEST_CASE("project_grading examples") {
    const GradedAlgebra h = quaternions();
    const GradedAlgebra am = project_grading(h, {0, 1}, BilinearFormZ2::custom({{0, 1}, {1, 0}}));
    CHECK(am.degree(am.at("i")) == deg({0, 1}));
    CHECK(am.degree(am.at("j")) == deg({1, 0}));
    CHECK(am.degree(am.at("k")) == deg({1, 1}));
    CHECK(check_graded_commutative(am).passed());

    const GradedAlgebra cl = clifford(CliffordSignature::real(2, 1));
    const GradedAlgebra z2 = project_grading(cl, {3}, BilinearFormZ2::scalar_product(1));
    for (const char* g : {"α1", "α2", "α3"}) CHECK(parity(z2.degree(z2.at(g)), z2.form()) == 1);
    // alpha1 (alpha1 alpha2) = -(alpha1 alpha2) alpha1 with an even factor: not a superalgebra
    CHECK_FALSE(check_graded_commutative(z2).passed());

    CHECK(project_grading(h, {0, 1, 2}, h.form()) == h);
    CHECK_THROWS_AS(project_grading(h, {0, 1}, BilinearFormZ2::scalar_product(3)), DimensionError);
    CHECK_THROWS_AS(project_grading(h, {5}, BilinearFormZ2::scalar_product(1)), DimensionError);
}

TEST_CASE("find_unit") {
    CHECK(find_unit(quaternions()) == quaternions()["ε"]);
    CHECK_FALSE(find_unit(k3()).has_value());
    CHECK_FALSE(find_unit(extended_quaternions()).has_value());
    // a unit that is not a basis vector
    const GradedAlgebra c1 = clifford(CliffordSignature::complexified(1));
    const GradedAlgebra nounit = GradedAlgebra::make(c1.field(), c1.width(), c1.basis(), c1.constants(), c1.form());
    CHECK(find_unit(nounit) == c1["ε"]);
}

TEST_CASE("render") {
    const GradedAlgebra eh = extended_quaternions();
    CHECK(render(eh, multiply(eh, eh["a_j"], eh["i"])) == "-1/2 a_k");
    CHECK(render(eh, Element()) == "0");
    CHECK(render(eh, eh["ε"] - eh["i"]) == "ε - i");
}
