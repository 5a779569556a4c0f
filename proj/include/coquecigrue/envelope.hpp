#pragma once

#include "coquecigrue/lm.hpp"
#include "coquecigrue/pbw.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace coquecigrue {

// Element of U(g) (x) M in the basis (PBW monomial) (x) (module basis):
// monomial -> coefficient vector in M, no zero vectors stored.
using BimoduleElement = std::map<PBWMonomial, SparseVec>;
// Same container, read against S(g) (x) M through a trivialization.
using SymModuleElement = BimoduleElement;

void add_term(BimoduleElement& dst, const PBWMonomial& m, const SparseVec& v,
              const Rational& c = Rational(1));
void add_scaled(BimoduleElement& dst, const BimoduleElement& src, const Rational& c);
std::string bimodule_to_string(const BimoduleElement& b, std::span<const std::string> glabels,
                               std::span<const std::string> mlabels);

// Two bases of U(g) (x) M over S(g) (x) M. Left symmetrizes only the
// monomial factor; Sym averages the module generator into the word,
// acting on it from both sides.
enum class Trivialization { LEFT, SYM };

std::string trivialization_name(Trivialization t);

// The universal enveloping object of a Lie algebra in the linear-map
// category: the U(g)-bimodule U(g) (x) M with
//   g . (h (x) m) = gh (x) m
//   (h (x) m) . g = hg (x) m + h (x) [m,g]
// and the dialgebra structure x -| y = x . delta(y), x |- y = delta(x) . y.
class LMEnveloping {
public:
    explicit LMEnveloping(LMLieAlgebra a);

    const LMLieAlgebra& algebra() const { return a_; }
    const UniversalEnveloping& uea() const { return uea_; }

    BimoduleElement generator(std::size_t v) const; // 1 (x) e_v

    BimoduleElement left_act(const UEAElement& h, const BimoduleElement& b,
                             std::optional<unsigned> cutoff = {}) const;
    BimoduleElement right_act(const BimoduleElement& b, const UEAElement& h,
                              std::optional<unsigned> cutoff = {}) const;
    UEAElement delta_env(const BimoduleElement& b) const;

    BimoduleElement dialg_left(const BimoduleElement& x, const BimoduleElement& y) const;
    BimoduleElement dialg_right(const BimoduleElement& x, const BimoduleElement& y) const;

    // All five dialgebra axioms on the spanning set
    // {beta (x) basis vector : |beta| + 1 <= degree_bound}.
    AxiomReport check_dialgebra(unsigned degree_bound) const;

    BimoduleElement symmetrize(const PBWMonomial& beta, std::size_t v, Trivialization t) const;
    BimoduleElement symmetrize(const SymModuleElement& s, Trivialization t) const;
    SymModuleElement desymmetrize(const BimoduleElement& b, Trivialization t) const;

    // coefficient vector in M of the S^0 (x) M part of desymmetrize
    SparseVec primitive_part(const BimoduleElement& b, Trivialization t) const;

private:
    BimoduleElement right_act_letter(const BimoduleElement& b, std::size_t letter) const;

    LMLieAlgebra a_;
    UniversalEnveloping uea_;
    mutable std::map<std::tuple<PBWMonomial, std::size_t, int>, BimoduleElement> sym_cache_;
};

} // namespace coquecigrue
