#pragma once

#include "coquecigrue/linalg.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace coquecigrue {

struct AxiomViolation {
    std::string axiom;
    std::vector<std::size_t> witness; // basis indices that exhibit the failure
    std::string lhs;
    std::string rhs;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool passed() const { return violations.empty(); }
    std::string to_string() const;
};

using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

// A finite-dimensional bilinear bracket given by structure constants on a
// labelled basis. Immutable once built; entries absent from the table are
// zero. Carries no axioms by itself: check_leibniz / check_lie decide what
// it is.
class AlgebraPresentation {
public:
    explicit AlgebraPresentation(std::vector<std::string> basis_names, BracketTable table = {});

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const BracketTable& table() const { return table_; }

    const SparseVec& bracket(std::size_t i, std::size_t j) const;
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
    SparseVec bracket(std::size_t i, const SparseVec& y) const;
    SparseVec bracket(const SparseVec& x, std::size_t j) const;

    bool operator==(const AlgebraPresentation& other) const = default;

private:
    std::vector<std::string> names_;
    BracketTable table_;
};

// [[x,y],z] = [[x,z],y] + [x,[y,z]] over all basis triples.
AxiomReport check_leibniz(const AlgebraPresentation& a);

// Antisymmetry on pairs plus the Leibniz identity, which on an
// antisymmetric bracket is the Jacobi identity.
AxiomReport check_lie(const AlgebraPresentation& a);

struct Liezation {
    AlgebraPresentation quotient;
    QMatrix projection;                            // dim(quotient) x dim(input)
    std::vector<std::size_t> kept;                 // input columns representing quotient basis
    std::vector<std::vector<Rational>> ideal_basis; // RREF basis of the squares ideal
};

// Quotient by the two-sided ideal generated by all squares [x,x]; the
// result is the universal Lie image. Throws NotLeibnizError on bad input
// and verifies its own postconditions (quotient is Lie, projection is a
// bracket morphism).
Liezation liezation(const AlgebraPresentation& a);

} // namespace coquecigrue
