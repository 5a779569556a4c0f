#include "coquecigrue/algebra.hpp"
#include "coquecigrue/errors.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace coquecigrue;

namespace {

AlgebraPresentation heisenberg() {
    BracketTable t;
    t[{0, 1}] = unit_vec(2);
    t[{1, 0}] = scaled(unit_vec(2), Rational(-1));
    return AlgebraPresentation({"x", "y", "z"}, t);
}

} // namespace

TEST_CASE("bracket table is bilinear with zero defaults") {
    AlgebraPresentation a = heisenberg();
    CHECK(a.bracket(0, 1) == unit_vec(2));
    CHECK(a.bracket(0, 2).empty());
    CHECK(a.bracket(2, 2).empty());

    SparseVec xy = vec_sum(unit_vec(0), unit_vec(1));
    CHECK(a.bracket(xy, xy).empty()); // [x+y, x+y] = z - z
    CHECK(a.bracket(0, xy) == unit_vec(2));
    CHECK(a.bracket(xy, 0) == scaled(unit_vec(2), Rational(-1)));
}

TEST_CASE("constructor validates indices and drops zero entries") {
    CHECK_THROWS_AS(AlgebraPresentation({"x"}, {{{0, 1}, unit_vec(0)}}), ValidationError);
    CHECK_THROWS_AS(AlgebraPresentation({"x"}, {{{0, 0}, unit_vec(1)}}), ValidationError);

    BracketTable t;
    t[{0, 0}] = SparseVec{{0, Rational(0)}};
    CHECK(AlgebraPresentation({"x"}, t).table().empty());
}

TEST_CASE("check_lie on the corpus") {
    CHECK(check_lie(heisenberg()).passed());
    CHECK(check_lie(fixture_algebra("sl2")).passed());
    CHECK(check_lie(fixture_algebra("solvable2")).passed());
    CHECK(check_lie(fixture_algebra("abelian2")).passed());
}

TEST_CASE("check_lie reports the failing pair") {
    BracketTable t;
    t[{0, 1}] = unit_vec(2); // no antisymmetric partner
    auto report = check_lie(AlgebraPresentation({"x", "y", "z"}, t));
    REQUIRE_FALSE(report.passed());
    CHECK(report.violations.front().axiom == "antisymmetry");
    CHECK(report.violations.front().witness == std::vector<std::size_t>{0, 1});
}

TEST_CASE("check_leibniz accepts non-antisymmetric brackets") {
    AlgebraPresentation sq = fixture_algebra("leibniz_square");
    CHECK(check_leibniz(sq).passed());
    CHECK_FALSE(check_lie(sq).passed());

    CHECK(check_leibniz(fixture_algebra("leibniz_dim3")).passed());
    CHECK(check_leibniz(fixture_algebra("leibniz_heisenberg_ext")).passed());
}

TEST_CASE("check_leibniz reports the failing triple") {
    BracketTable t;
    t[{0, 0}] = unit_vec(0); // [[x,x],x] = x but the right side is 2x
    auto report = check_leibniz(AlgebraPresentation({"x"}, t));
    REQUIRE_FALSE(report.passed());
    CHECK(report.violations.front().axiom == "leibniz");
    CHECK(report.violations.front().witness == std::vector<std::size_t>{0, 0, 0});
    CHECK(report.violations.front().lhs == "x");
    CHECK(report.violations.front().rhs == "2*x");
}

TEST_CASE("liezation of [b,b]=a collapses to one dimension") {
    Liezation lz = liezation(fixture_algebra("leibniz_square"));
    CHECK(lz.quotient.dim() == 1);
    CHECK(lz.quotient.basis_names() == std::vector<std::string>{"b"});
    CHECK(lz.quotient.table().empty());
    CHECK(lz.ideal_basis.size() == 1);
    CHECK(lz.kept == std::vector<std::size_t>{1});

    // projection kills a and keeps b
    CHECK(lz.projection.rows() == 1);
    CHECK(lz.projection.cols() == 2);
    CHECK(lz.projection.at(0, 0) == 0);
    CHECK(lz.projection.at(0, 1) == 1);
}

TEST_CASE("liezation closes the ideal under brackets") {
    // [c,c] = b seeds the ideal, [b,c] = a extends it
    Liezation lz = liezation(fixture_algebra("leibniz_dim3"));
    CHECK(lz.quotient.dim() == 1);
    CHECK(lz.ideal_basis.size() == 2);
    CHECK(lz.quotient.basis_names() == std::vector<std::string>{"c"});
}

TEST_CASE("liezation of the heisenberg extension recovers heisenberg") {
    Liezation lz = liezation(fixture_algebra("leibniz_heisenberg_ext"));
    CHECK(lz.quotient == heisenberg());
    CHECK(lz.ideal_basis.size() == 1);
    // w spans the ideal, so it dies under the projection
    CHECK(lz.projection.apply(unit_vec(3)).empty());
    CHECK(lz.projection.apply(unit_vec(0)) == unit_vec(0));
}

TEST_CASE("liezation of a Lie algebra is the identity quotient") {
    AlgebraPresentation h = heisenberg();
    Liezation lz = liezation(h);
    CHECK(lz.quotient == h);
    CHECK(lz.ideal_basis.empty());
    CHECK(lz.projection == QMatrix::identity(3));
}

TEST_CASE("liezation rejects non-Leibniz input") {
    BracketTable t;
    t[{0, 0}] = unit_vec(0);
    CHECK_THROWS_AS(liezation(AlgebraPresentation({"x"}, t)), NotLeibnizError);
}
