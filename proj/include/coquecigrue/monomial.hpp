#pragma once

#include "coquecigrue/linalg.hpp"
#include "coquecigrue/rational.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace coquecigrue {

// A word in basis letters, leftmost factor first. Not normalized.
using Word = std::vector<std::size_t>;

// Commutative exponent vector over a fixed ordered basis; doubles as an
// ordered PBW monomial x_0^{a_0} x_1^{a_1} ... (ascending letters).
class PBWMonomial {
public:
    PBWMonomial() = default;
    explicit PBWMonomial(std::size_t width) : exp_(width, 0) {}
    static PBWMonomial generator(std::size_t width, std::size_t i);
    static PBWMonomial from_word(std::size_t width, const Word& w);

    std::size_t width() const { return exp_.size(); }
    unsigned degree() const { return degree_; }
    unsigned exponent(std::size_t i) const { return exp_.at(i); }
    void bump(std::size_t i, unsigned by = 1);

    PBWMonomial operator*(const PBWMonomial& other) const;
    // componentwise difference; caller must ensure other divides *this
    PBWMonomial operator/(const PBWMonomial& other) const;
    bool divides(const PBWMonomial& other) const;

    Word word() const; // letters ascending, with multiplicity

    // graded, then lexicographic by exponents
    std::strong_ordering operator<=>(const PBWMonomial& other) const;
    bool operator==(const PBWMonomial& other) const = default;

    std::string to_string(std::span<const std::string> labels) const;

private:
    std::vector<unsigned> exp_;
    unsigned degree_ = 0;
};

// All monomials of degree <= maxdeg, in the PBWMonomial ordering.
std::vector<PBWMonomial> monomials_up_to(std::size_t width, unsigned maxdeg);
std::vector<PBWMonomial> monomials_of_degree(std::size_t width, unsigned deg);

// prod_i a_i!
BigInt monomial_factorial(const PBWMonomial& m);
// prod_i C(a_i, b_i); zero unless b divides a
Rational monomial_binomial(const PBWMonomial& a, const PBWMonomial& b);

} // namespace coquecigrue
