#include "coquecigrue/envelope.hpp"
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

PBWMonomial mono(std::size_t width, const Word& w) { return PBWMonomial::from_word(width, w); }

BimoduleElement element(std::size_t width,
                        std::initializer_list<std::pair<Word, SparseVec>> terms) {
    BimoduleElement out;
    for (const auto& [w, v] : terms)
        add_term(out, PBWMonomial::from_word(width, w), v);
    return out;
}

} // namespace

TEST_CASE("dialgebra products on the squares quotient") {
    // [b,b] = a: the quotient is spanned by the class of b, the module is
    // the whole algebra with delta(a) = 0, delta(b) = t
    LMEnveloping env(fixture_lm("leibniz_square"));

    BimoduleElement ga = env.generator(0);
    BimoduleElement gb = env.generator(1);

    CHECK(env.dialg_left(gb, gb) ==
          element(1, {{{0}, unit_vec(1)}, {{}, unit_vec(0)}})); // t(x)b + 1(x)a
    CHECK(env.dialg_right(gb, gb) == element(1, {{{0}, unit_vec(1)}}));
    CHECK(env.dialg_left(gb, ga).empty());
    CHECK(env.dialg_left(ga, gb) == element(1, {{{0}, unit_vec(0)}}));
    CHECK(env.dialg_right(ga, gb).empty()); // delta(a) = 0
}

TEST_CASE("primitive projection recovers the original bracket") {
    for (const char* stem : {"leibniz_square", "leibniz_dim3", "leibniz_heisenberg_ext"}) {
        LMLieAlgebra a = fixture_lm(stem);
        LMEnveloping env(a);
        AlgebraPresentation leib = leibniz_from_lm(a);
        for (std::size_t u = 0; u < a.module().dim(); ++u)
            for (std::size_t v = 0; v < a.module().dim(); ++v)
                CHECK(env.primitive_part(env.dialg_left(env.generator(u), env.generator(v)),
                                         Trivialization::LEFT) == leib.bracket(u, v));
    }
}

TEST_CASE("right action folds one letter at a time") {
    LMEnveloping env(fixture_lm("heisenberg_adjoint"));

    // (1 (x) m1) . y^2 = y^2 (x) m1 + 2 y (x) m3
    UEAElement ysq{{mono(3, {1, 1}), Rational(1)}};
    BimoduleElement got = env.right_act(env.generator(0), ysq);
    CHECK(got == element(3, {{{1, 1}, unit_vec(0)}, {{1}, scaled(unit_vec(2), Rational(2))}}));

    // cutoff drops the degree-2 monomial but keeps the folded term
    CHECK(env.right_act(env.generator(0), ysq, 1) ==
          element(3, {{{1}, scaled(unit_vec(2), Rational(2))}}));
}

TEST_CASE("left action multiplies into the monomial factor") {
    LMEnveloping env(fixture_lm("heisenberg_adjoint"));
    UEAElement x{{mono(3, {0}), Rational(1)}};
    UEAElement y{{mono(3, {1}), Rational(1)}};

    BimoduleElement m2 = env.generator(1);
    CHECK(env.left_act(x, m2) == element(3, {{{0}, unit_vec(1)}}));
    // y . (x . (1 (x) m2)) = (yx) (x) m2 = xy (x) m2 - z (x) m2
    BimoduleElement got = env.left_act(y, env.left_act(x, m2));
    CHECK(got == element(3, {{{0, 1}, unit_vec(1)}, {{2}, scaled(unit_vec(1), Rational(-1))}}));
    CHECK(got == env.left_act(env.uea().normalize({1, 0}), m2));
}

TEST_CASE("delta_env multiplies the module image into the word") {
    LMEnveloping env(fixture_lm("heisenberg_adjoint"));
    CHECK(env.delta_env(env.generator(2)) == UEAElement{{mono(3, {2}), Rational(1)}});

    // delta(y (x) m1) = y x = xy - z
    BimoduleElement b = element(3, {{{1}, unit_vec(0)}});
    UEAElement want;
    add_term(want, mono(3, {0, 1}), Rational(1));
    add_term(want, mono(3, {2}), Rational(-1));
    CHECK(env.delta_env(b) == want);
}

TEST_CASE("the two trivializations of the enveloping bimodule") {
    LMEnveloping env(fixture_lm("heisenberg_adjoint"));

    // left: symmetrize the monomial factor only
    BimoduleElement left = env.symmetrize(mono(3, {0, 1}), 0, Trivialization::LEFT);
    CHECK(left == element(3, {{{0, 1}, unit_vec(0)}, {{2}, scaled(unit_vec(0), Rational(-1, 2))}}));

    // sym: average the generator into the word; one letter b gives
    // b (x) v + (1/2) 1 (x) [v, b]
    BimoduleElement sym = env.symmetrize(mono(3, {0}), 1, Trivialization::SYM);
    CHECK(sym == element(3, {{{0}, unit_vec(1)}, {{}, scaled(unit_vec(2), Rational(-1, 2))}}));

    // degree 0 the two agree
    CHECK(env.symmetrize(mono(3, {}), 2, Trivialization::LEFT) == env.generator(2));
    CHECK(env.symmetrize(mono(3, {}), 2, Trivialization::SYM) == env.generator(2));
}

TEST_CASE("trivializations round-trip") {
    LMEnveloping env(fixture_lm("heisenberg_adjoint"));
    for (Trivialization t : {Trivialization::LEFT, Trivialization::SYM})
        for (const auto& m : monomials_up_to(3, 3))
            for (std::size_t v = 0; v < 3; ++v) {
                SymModuleElement s;
                add_term(s, m, unit_vec(v));
                CHECK(env.desymmetrize(env.symmetrize(s, t), t) == s);
                BimoduleElement b;
                add_term(b, m, unit_vec(v));
                CHECK(env.symmetrize(env.desymmetrize(b, t), t) == b);
            }
}

TEST_CASE("primitive parts of a turned-around product differ by the trivialization") {
    LMEnveloping env(fixture_lm("heisenberg_adjoint"));
    // (1 (x) m1) . y = y (x) m1 + 1 (x) m3
    BimoduleElement prod = env.right_act(env.generator(0), UEAElement{{mono(3, {1}), Rational(1)}});
    CHECK(env.primitive_part(prod, Trivialization::LEFT) == unit_vec(2));
    CHECK(env.primitive_part(prod, Trivialization::SYM) == scaled(unit_vec(2), Rational(1, 2)));
}

TEST_CASE("dialgebra axioms hold on the enveloping bimodule") {
    CHECK(LMEnveloping(fixture_lm("leibniz_square")).check_dialgebra(3).passed());
    CHECK(LMEnveloping(fixture_lm("heisenberg_adjoint")).check_dialgebra(3).passed());
    CHECK(LMEnveloping(fixture_lm("trivial_to_g")).check_dialgebra(3).passed());
    CHECK(LMEnveloping(fixture_lm("trivial_v_to_0")).check_dialgebra(3).passed());
}

TEST_CASE("dialgebra sweep flags a broken module action") {
    ActionTable bad;
    bad[{0, 1}] = unit_vec(1); // [m1, y] = m2 is not a module action over heisenberg
    bad[{1, 0}] = scaled(unit_vec(2), Rational(-1));
    LMLieAlgebra broken = LMLieAlgebra::unchecked(
        heisenberg(), RightModule({"m1", "m2", "m3"}, 3, bad), QMatrix::identity(3));
    REQUIRE_FALSE(check_right_module(broken.module(), broken.lie()).passed());

    auto report = LMEnveloping(broken).check_dialgebra(2);
    REQUIRE_FALSE(report.passed());
    for (const auto& v : report.violations) {
        bool known = v.axiom == "left-left-assoc" || v.axiom == "left-absorbs-right" ||
                     v.axiom == "middle-assoc" || v.axiom == "right-absorbs-left" ||
                     v.axiom == "right-right-assoc";
        CHECK(known);
        CHECK(v.witness.size() == 3);
    }
}

TEST_CASE("bimodule rendering") {
    LMEnveloping env(fixture_lm("heisenberg_adjoint"));
    const auto& g = env.algebra().lie().basis_names();
    const auto& m = env.algebra().module().basis_names();
    CHECK(bimodule_to_string({}, g, m) == "0");
    BimoduleElement b = element(3, {{{1}, unit_vec(0)}, {{}, unit_vec(2)}});
    CHECK(bimodule_to_string(b, g, m) == "1 (x) (m3) + y (x) (m1)");
}
