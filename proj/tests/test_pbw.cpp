#include "coquecigrue/errors.hpp"
#include "coquecigrue/monomial.hpp"
#include "coquecigrue/pbw.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <tuple>

using namespace coquecigrue;

namespace {

AlgebraPresentation heisenberg() {
    BracketTable t;
    t[{0, 1}] = unit_vec(2);
    t[{1, 0}] = scaled(unit_vec(2), Rational(-1));
    return AlgebraPresentation({"x", "y", "z"}, t);
}

PBWMonomial mono(std::size_t width, const Word& w) { return PBWMonomial::from_word(width, w); }

// all words of the given length over `width` letters
std::vector<Word> words_of_length(std::size_t width, unsigned len) {
    std::vector<Word> out{{}};
    for (unsigned i = 0; i < len; ++i) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (std::size_t letter = 0; letter < width; ++letter) {
                Word copy = w;
                copy.push_back(letter);
                next.push_back(std::move(copy));
            }
        out = std::move(next);
    }
    return out;
}

// coproduct of the symmetric algebra: binomial splits of the exponent
TensorElement sym_coproduct(const PBWMonomial& m) {
    TensorElement out;
    for (const auto& beta : monomials_up_to(m.width(), m.degree()))
        if (beta.divides(m))
            out[{beta, m / beta}] = monomial_binomial(m, beta);
    return out;
}

TensorElement tensor_mul(const UniversalEnveloping& u, const TensorElement& a,
                         const TensorElement& b) {
    TensorElement out;
    for (const auto& [am, ac] : a)
        for (const auto& [bm, bc] : b) {
            UEAElement left = u.mul(am.first, bm.first);
            UEAElement right = u.mul(am.second, bm.second);
            for (const auto& [lm, lc] : left)
                for (const auto& [rm, rc] : right) {
                    Rational c = ac * bc * lc * rc;
                    auto it = out.emplace(std::make_pair(lm, rm), Rational(0)).first;
                    it->second += c;
                    if (it->second == 0)
                        out.erase(it);
                }
        }
    return out;
}

} // namespace

TEST_CASE("monomial ordering is graded then lexicographic") {
    CHECK(mono(3, {}) < mono(3, {2}));
    CHECK(mono(3, {2}) < mono(3, {0, 0}));
    // same degree compares by exponent vectors, so later letters sort lower
    CHECK(mono(3, {2}) < mono(3, {1}));
    CHECK(mono(3, {1}) < mono(3, {0}));
    CHECK(mono(3, {0, 1}).word() == Word{0, 1});
    CHECK(mono(3, {1, 0}) == mono(3, {0, 1}));
    CHECK(mono(3, {0, 1, 1}).degree() == 3);
}

TEST_CASE("monomial arithmetic") {
    PBWMonomial a = mono(2, {0, 0, 1});
    PBWMonomial b = mono(2, {0, 1});
    CHECK(b.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(a / b == mono(2, {0}));
    CHECK(b * mono(2, {0}) == a);
    CHECK_THROWS_AS(b / a, InternalError);

    CHECK(monomial_factorial(mono(2, {0, 0, 1})) == 2);
    CHECK(monomial_binomial(a, b) == Rational(2));
    CHECK(monomial_binomial(b, a) == Rational(0));
}

TEST_CASE("monomial enumeration counts stars and bars") {
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(2, 5).size() == 6);
    CHECK(monomials_up_to(3, 3).size() == 20);
    CHECK(monomials_up_to(1, 4).size() == 5);

    auto all = monomials_up_to(3, 3);
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("monomial rendering") {
    std::vector<std::string> labels{"x", "y", "z"};
    CHECK(PBWMonomial(3).to_string(labels) == "1");
    CHECK(mono(3, {0, 0, 1}).to_string(labels) == "x^2*y");
    CHECK(mono(3, {2}).to_string(labels) == "z");
}

TEST_CASE("straightening over heisenberg matches hand expansion") {
    UniversalEnveloping u(heisenberg());

    // yx = xy - z
    UEAElement got = u.normalize({1, 0});
    UEAElement want;
    add_term(want, mono(3, {0, 1}), Rational(1));
    add_term(want, mono(3, {2}), Rational(-1));
    CHECK(got == want);

    // yxx = x^2 y - 2 xz
    got = u.normalize({1, 0, 0});
    want.clear();
    add_term(want, mono(3, {0, 0, 1}), Rational(1));
    add_term(want, mono(3, {0, 2}), Rational(-2));
    CHECK(got == want);

    // already-ordered words pass through
    CHECK(u.normalize({0, 1, 2}) == UEAElement{{mono(3, {0, 1, 2}), Rational(1)}});
}

TEST_CASE("straightening is independent of the rewrite order") {
    for (const char* stem : {"heisenberg", "sl2", "solvable2"}) {
        UniversalEnveloping u(fixture_algebra(stem));
        for (unsigned len = 0; len <= 5; ++len)
            for (const auto& w : words_of_length(u.width(), len))
                CHECK(u.normalize(w, Straightening::LeftmostFirst) ==
                      u.normalize(w, Straightening::RightmostFirst));
    }
}

TEST_CASE("multiplication is associative and unital") {
    UniversalEnveloping u(fixture_algebra("sl2"));
    auto monos = monomials_up_to(3, 2);
    std::vector<UEAElement> elems;
    for (const auto& m : monos)
        elems.push_back(UEAElement{{m, Rational(1)}});

    for (const auto& a : elems) {
        CHECK(u.mul(a, u.one()) == a);
        CHECK(u.mul(u.one(), a) == a);
        for (const auto& b : elems)
            for (const auto& c : elems)
                CHECK(u.mul(u.mul(a, b), c) == u.mul(a, u.mul(b, c)));
    }
}

TEST_CASE("multiplication honors the degree cutoff") {
    UniversalEnveloping u(heisenberg());
    UEAElement x{{mono(3, {0}), Rational(1)}};
    UEAElement y{{mono(3, {1}), Rational(1)}};
    UEAElement yx = u.mul(y, x, 1);
    // xy truncates away, the degree-1 correction -z survives
    CHECK(yx == UEAElement{{mono(3, {2}), Rational(-1)}});
}

TEST_CASE("coproduct expands by binomials") {
    UniversalEnveloping u(heisenberg());

    TensorElement got = u.coproduct(UEAElement{{mono(3, {0, 0}), Rational(1)}});
    TensorElement want;
    want[{mono(3, {0, 0}), mono(3, {})}] = 1;
    want[{mono(3, {0}), mono(3, {0})}] = 2;
    want[{mono(3, {}), mono(3, {0, 0})}] = 1;
    CHECK(got == want);

    got = u.coproduct(UEAElement{{mono(3, {0, 1}), Rational(1)}});
    CHECK(got.size() == 4);
    CHECK(got[{mono(3, {0}), mono(3, {1})}] == 1);
    CHECK(got[{mono(3, {1}), mono(3, {0})}] == 1);
}

TEST_CASE("coproduct is coassociative") {
    UniversalEnveloping u(heisenberg());
    using Tensor3 = std::map<std::tuple<PBWMonomial, PBWMonomial, PBWMonomial>, Rational>;

    for (const auto& m : monomials_up_to(3, 3)) {
        TensorElement once = u.coproduct(UEAElement{{m, Rational(1)}});
        Tensor3 left, right;
        for (const auto& [pair, c] : once) {
            for (const auto& [inner, ic] : u.coproduct(UEAElement{{pair.first, Rational(1)}}))
                left[{inner.first, inner.second, pair.second}] += c * ic;
            for (const auto& [inner, ic] : u.coproduct(UEAElement{{pair.second, Rational(1)}}))
                right[{pair.first, inner.first, inner.second}] += c * ic;
        }
        CHECK(left == right);
    }
}

TEST_CASE("coproduct is an algebra morphism") {
    UniversalEnveloping u(fixture_algebra("sl2"));
    auto monos = monomials_up_to(3, 3);
    for (const auto& a : monos)
        for (const auto& b : monos) {
            if (a.degree() + b.degree() > 3)
                continue;
            TensorElement lhs = u.coproduct(u.mul(a, b));
            TensorElement rhs = tensor_mul(u, u.coproduct(UEAElement{{a, Rational(1)}}),
                                           u.coproduct(UEAElement{{b, Rational(1)}}));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("counit picks the constant term") {
    UniversalEnveloping u(heisenberg());
    CHECK(UniversalEnveloping::counit(u.one()) == 1);
    UEAElement e = u.normalize({1, 0});
    CHECK(UniversalEnveloping::counit(e) == 0);
    add_term(e, mono(3, {}), Rational(5));
    CHECK(UniversalEnveloping::counit(e) == 5);
}

TEST_CASE("symmetrization of small monomials") {
    UniversalEnveloping u(heisenberg());

    CHECK(u.symmetrize(mono(3, {0})) == UEAElement{{mono(3, {0}), Rational(1)}});
    CHECK(u.symmetrize(mono(3, {0, 0})) == UEAElement{{mono(3, {0, 0}), Rational(1)}});

    // sigma(x v y) = (xy + yx)/2 = xy - z/2
    UEAElement want;
    add_term(want, mono(3, {0, 1}), Rational(1));
    add_term(want, mono(3, {2}), Rational(-1, 2));
    CHECK(u.symmetrize(mono(3, {0, 1})) == want);
}

TEST_CASE("symmetrization round-trips") {
    for (const char* stem : {"heisenberg", "sl2"}) {
        UniversalEnveloping u(fixture_algebra(stem));
        for (const auto& m : monomials_up_to(3, 4)) {
            SymElement s{{m, Rational(1)}};
            CHECK(u.desymmetrize(u.symmetrize(s)) == s);
            UEAElement e{{m, Rational(1)}};
            CHECK(u.symmetrize(u.desymmetrize(e)) == e);
        }
    }
}

TEST_CASE("symmetrization is a coalgebra morphism") {
    UniversalEnveloping u(heisenberg());
    for (const auto& m : monomials_up_to(3, 3)) {
        TensorElement lhs = u.coproduct(u.symmetrize(m));
        TensorElement rhs;
        for (const auto& [pair, c] : sym_coproduct(m)) {
            UEAElement left = u.symmetrize(pair.first);
            UEAElement right = u.symmetrize(pair.second);
            for (const auto& [lm, lc] : left)
                for (const auto& [rm, rc] : right) {
                    Rational v = c * lc * rc;
                    auto it = rhs.emplace(std::make_pair(lm, rm), Rational(0)).first;
                    it->second += v;
                    if (it->second == 0)
                        rhs.erase(it);
                }
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("primitive part extracts the degree-1 coefficient") {
    UniversalEnveloping u(heisenberg());

    CHECK(u.primitive_part(u.from_vector(unit_vec(0))) == unit_vec(0));
    // xy = sigma(x v y) + z/2, so prim(xy) = z/2
    CHECK(u.primitive_part(UEAElement{{mono(3, {0, 1}), Rational(1)}}) ==
          scaled(unit_vec(2), Rational(1, 2)));
    CHECK(u.primitive_part(UEAElement{{mono(3, {0, 0, 1}), Rational(1)}}).empty());

    // prim(uv - vu) = [u, v] for degree-1 u, v
    UniversalEnveloping s(fixture_algebra("sl2"));
    UEAElement e = s.from_vector(unit_vec(0));
    UEAElement f = s.from_vector(unit_vec(1));
    UEAElement comm = s.mul(e, f);
    add_scaled(comm, s.mul(f, e), Rational(-1));
    CHECK(s.primitive_part(comm) == unit_vec(2)); // [e, f] = h
}

TEST_CASE("the enveloping algebra rejects non-Lie input") {
    CHECK_THROWS_AS(UniversalEnveloping(fixture_algebra("leibniz_square")), NotLieError);
}
