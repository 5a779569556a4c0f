#pragma once

#include "coquecigrue/envelope.hpp"
#include "coquecigrue/lm.hpp"
#include "coquecigrue/pbw.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace coquecigrue {

// A tuple of formal power series in two groups of variables, truncated
// beyond total degree `order`. coeffs[(alpha, beta)] is the coefficient
// vector of x^alpha y^beta; keys with zero vectors are absent. Power
// series convention: the coefficient multiplies the bare monomial.
struct SeriesMap {
    unsigned order = 1;
    std::size_t n_in1 = 0, n_in2 = 0, n_out = 0;
    std::map<std::pair<PBWMonomial, PBWMonomial>, SparseVec> coeffs;

    bool operator==(const SeriesMap& other) const = default;
};

// Degree-1 series of the integrated object: coefficient of x^alpha (x)
// e_v (x) y^beta, a vector in M.
struct G1Series {
    unsigned order = 1;
    std::size_t n_g = 0, n_m = 0;
    std::map<std::tuple<PBWMonomial, std::size_t, PBWMonomial>, SparseVec> coeffs;

    bool operator==(const G1Series& other) const = default;
};

// The one-variable degree-1 family g2(v, y): module generator times a
// monomial in y. n_y starts at dim(g) and doubles under composition.
struct G2Series {
    unsigned order = 1;
    std::size_t n_m = 0, n_y = 0;
    std::map<std::pair<std::size_t, PBWMonomial>, SparseVec> coeffs;

    bool operator==(const G2Series& other) const = default;
};

using AlphaTable = std::map<std::tuple<PBWMonomial, std::size_t, PBWMonomial>, SparseVec>;

struct LMFormalGroup {
    SeriesMap f;
    G1Series g1;
    G2Series g2;
    // nonzero entries of the right-action family with a nonempty alpha;
    // empty exactly when the degree-1 series ignores the group direction
    AlphaTable alpha_dependence;
    Trivialization trivialization = Trivialization::LEFT;
    unsigned order = 1;
};

// Truncated group law on g from the enveloping algebra: the coefficient
// of x^alpha y^beta is prim(sigma(alpha) sigma(beta)) / (alpha! beta!).
// Throws NotLieError on non-Lie input.
SeriesMap integrate_lie(const AlgebraPresentation& g, unsigned order);

// The same law from the Dynkin commutator series, computed on nested
// brackets of polynomial vectors; shares no code with the PBW route and
// serves as its oracle.
SeriesMap cbh_dynkin(const AlgebraPresentation& g, unsigned order);

LMFormalGroup integrate_lm(const LMLieAlgebra& a, unsigned order, Trivialization triv);

// g2(g2(v, y), z): the inner series feeds the module slot.
G2Series compose_series(const G2Series& outer, const G2Series& inner, unsigned order);
// g2(v, f(y, z)): the series substitutes into the y variables.
G2Series compose_series(const G2Series& outer, const SeriesMap& inner, unsigned order);

// Unitality f(x,0) = x, f(0,y) = y and associativity
// f(f(x,y),z) = f(x,f(y,z)) up to the truncation order.
AxiomReport verify_formal_group(const SeriesMap& f, unsigned order);

struct ClaimResult {
    std::string name;
    bool applicable = true;
    bool asserted = false; // whether this trivialization promises the claim
    bool passed = false;
    std::vector<std::string> discrepancies;
};

struct LMIntegrationReport {
    Trivialization trivialization = Trivialization::LEFT;
    std::vector<ClaimResult> claims;
    // all promised claims hold; the others are informational
    bool asserted_ok() const;
    const ClaimResult* find(const std::string& name) const;
};

// Evaluates the structural claims about an integrated object: the degree-1
// series is the bare generator, the g2 family ignores alpha, g2 is
// associative over f, g2 intertwines delta with the group law, and with
// M = g, delta = id it reproduces f. Left trivialization promises the
// first three, Sym the last two.
LMIntegrationReport verify_lm_integration(const LMFormalGroup& g, const LMLieAlgebra& a,
                                          unsigned order);

// theta: positive-degree monomials over n_in variables -> vectors in the
// n_out-dimensional target; extends to the unique coalgebra morphism
// S -> S with theta as its primitive part, theta'(mu) =
// sum 1/k! theta(mu_(1)) ... theta(mu_(k)) over positive-degree splits.
using SLinearMap = std::map<PBWMonomial, SparseVec>;
using SPoly = std::map<PBWMonomial, Rational>;
std::map<PBWMonomial, SPoly> extend_coalgebra_morphism(const SLinearMap& theta, std::size_t n_in,
                                                       std::size_t n_out, unsigned order);

// Degree-1 companion: theta0 on S(W) as above plus theta1 on S(W) (x) V;
// the extension sends mu (x) v to
// sum_{gamma <= mu} C(mu, gamma) theta0'(mu - gamma) (x) theta1(gamma (x) v).
using LMSymBasis = std::pair<PBWMonomial, std::size_t>;
using LMSymElement = std::map<LMSymBasis, Rational>;
std::map<LMSymBasis, LMSymElement> extend_coalgebra_morphism_deg1(
    const SLinearMap& theta0, const std::map<LMSymBasis, SparseVec>& theta1, std::size_t n_in_w,
    std::size_t n_in_v, std::size_t n_out_w, std::size_t n_out_v, unsigned order);

} // namespace coquecigrue
