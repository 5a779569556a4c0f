#pragma once

#include "coquecigrue/algebra.hpp"
#include "coquecigrue/monomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace coquecigrue {

// Element of the enveloping algebra in the PBW basis: ordered monomials
// with rational coefficients, no zero entries stored.
using UEAElement = std::map<PBWMonomial, Rational>;
// Same container, read as an element of the symmetric algebra S(g).
using SymElement = UEAElement;
using TensorElement = std::map<std::pair<PBWMonomial, PBWMonomial>, Rational>;

void add_term(UEAElement& dst, const PBWMonomial& m, const Rational& c);
void add_scaled(UEAElement& dst, const UEAElement& src, const Rational& c);
UEAElement uea_scaled(const UEAElement& u, const Rational& c);
std::string uea_to_string(const UEAElement& u, std::span<const std::string> labels);

// Which adjacent inversion a straightening step rewrites first. The
// result is independent of the choice; keeping both around makes that a
// testable statement instead of a belief.
enum class Straightening { LeftmostFirst, RightmostFirst };

// The enveloping algebra U(g) of a validated Lie algebra, with the PBW
// monomials on the chosen basis as a linear basis. All rewriting goes
// through x_j x_i = x_i x_j + [x_j, x_i] for j > i, memoized per word.
class UniversalEnveloping {
public:
    explicit UniversalEnveloping(AlgebraPresentation lie); // throws NotLieError

    const AlgebraPresentation& lie() const { return lie_; }
    std::size_t width() const { return lie_.dim(); }

    UEAElement normalize(const Word& w, Straightening s = Straightening::LeftmostFirst) const;
    UEAElement mul(const UEAElement& a, const UEAElement& b,
                   std::optional<unsigned> cutoff = {}) const;
    UEAElement mul(const PBWMonomial& a, const PBWMonomial& b) const;

    // Delta(x^a) = sum_{b <= a} prod_i C(a_i, b_i) x^b (x) x^(a-b); pure
    // binomials because the two tensor legs commute with each other.
    TensorElement coproduct(const UEAElement& u) const;
    static Rational counit(const UEAElement& u);

    // sigma: S(g) -> U(g), monomial -> average of all orderings of its
    // letters. A coalgebra isomorphism onto U(g), triangular with respect
    // to degree, so it inverts by peeling top monomials.
    UEAElement symmetrize(const PBWMonomial& m) const;
    UEAElement symmetrize(const SymElement& s) const;
    SymElement desymmetrize(const UEAElement& u) const;

    // coefficients of the degree-1 part of desymmetrize(u)
    SparseVec primitive_part(const UEAElement& u) const;

    UEAElement from_vector(const SparseVec& x) const;
    UEAElement one() const;

private:
    const UEAElement& normalize_cached(const Word& w, Straightening s) const;

    AlgebraPresentation lie_;
    mutable std::map<std::pair<Word, int>, UEAElement> word_cache_;
    mutable std::map<PBWMonomial, UEAElement> sigma_cache_;
};

} // namespace coquecigrue
