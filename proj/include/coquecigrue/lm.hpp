#pragma once

#include "coquecigrue/algebra.hpp"
#include "coquecigrue/monomial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace coquecigrue {

// An object of the linear-map category: a map delta : V -> W between
// finite-dimensional spaces, stored as a dim(W) x dim(V) matrix.
struct LMObject {
    std::size_t dim_v = 0;
    std::size_t dim_w = 0;
    QMatrix delta; // dim_w rows, dim_v columns

    bool operator==(const LMObject& other) const = default;
};

// Tensor product in the linear-map category. The degree-2 part V (x) V'
// is dropped by design, so degree 1 is V(x)W' + W(x)V' and degree 0 is
// W(x)W'. Index helpers fix the basis order once and for all: the V(x)W'
// block comes first, then W(x)V', both row-major in the left factor.
struct TensorBlocks {
    LMObject object;
    std::size_t dim_v_a = 0, dim_w_a = 0, dim_v_b = 0, dim_w_b = 0;

    std::size_t deg1_vw(std::size_t v, std::size_t w2) const { return v * dim_w_b + w2; }
    std::size_t deg1_wv(std::size_t w, std::size_t v2) const {
        return dim_v_a * dim_w_b + w * dim_v_b + v2;
    }
    std::size_t deg0(std::size_t w, std::size_t w2) const { return w * dim_w_b + w2; }
};

TensorBlocks lm_tensor(const LMObject& a, const LMObject& b);

// The braiding a(x)a -> a(x)a as a pair of matrices (degree 1, degree 0)
// in the lm_tensor(a, a) basis: v(x)w and w(x)v blocks swap, w(x)w'
// transposes.
std::pair<QMatrix, QMatrix> interchange(const LMObject& a);

// Symmetric or exterior power. Degree 0 is spanned by monomials of degree
// k over W; degree 1 by (monomial of degree k-1 over W) (x) (V generator).
// Exterior monomials are the square-free ones.
struct GradedPower {
    LMObject object;
    std::vector<PBWMonomial> deg0_basis;
    std::vector<std::pair<PBWMonomial, std::size_t>> deg1_basis;
};

GradedPower lm_symmetric_power(const LMObject& a, unsigned k);
GradedPower lm_exterior_power(const LMObject& a, unsigned k);

using ActionTable = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

// A space with a labelled basis and a bilinear right action of an
// algebra on it. Whether the action satisfies the module axiom is
// check_right_module's business.
class RightModule {
public:
    RightModule(std::vector<std::string> basis_names, std::size_t algebra_dim,
                ActionTable table = {});

    std::size_t dim() const { return names_.size(); }
    std::size_t algebra_dim() const { return algebra_dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const ActionTable& table() const { return table_; }

    const SparseVec& action(std::size_t v, std::size_t i) const;
    SparseVec act(const SparseVec& m, const SparseVec& x) const;
    SparseVec act(const SparseVec& m, std::size_t i) const;

    bool operator==(const RightModule& other) const = default;

private:
    std::vector<std::string> names_;
    std::size_t algebra_dim_;
    ActionTable table_;
};

// [m,[x,y]] = [[m,x],y] - [[m,y],x] over all basis triples.
AxiomReport check_right_module(const RightModule& m, const AlgebraPresentation& g);

// A Lie algebra internal to the linear-map category: delta : M -> g with
// g a Lie algebra, M a right g-module and delta equivariant. checked()
// enforces all three; unchecked() builds the raw object so the axiom
// checkers can be pointed at broken data.
class LMLieAlgebra {
public:
    static LMLieAlgebra checked(AlgebraPresentation g, RightModule m, QMatrix delta);
    static LMLieAlgebra unchecked(AlgebraPresentation g, RightModule m, QMatrix delta);

    const AlgebraPresentation& lie() const { return g_; }
    const RightModule& module() const { return m_; }
    const QMatrix& delta() const { return delta_; }

    SparseVec delta_of(std::size_t v) const { return delta_.column(v); }
    SparseVec delta_apply(const SparseVec& m) const { return delta_.apply(m); }

    LMObject object() const { return LMObject{m_.dim(), g_.dim(), delta_}; }

    bool operator==(const LMLieAlgebra& other) const = default;

private:
    LMLieAlgebra(AlgebraPresentation g, RightModule m, QMatrix delta);

    AlgebraPresentation g_;
    RightModule m_;
    QMatrix delta_;
};

// delta([m,x]) = [delta(m), x] over all basis pairs.
AxiomReport check_equivariance(const LMLieAlgebra& a);

// The categorical axioms, evaluated blockwise on the tensor square and
// cube: the bracket is a morphism in the category, it is antisymmetric
// under the interchange, and the (left) Jacobi identity holds in every
// degree-0 and degree-1 block. Equivalent to check_lie + check_right_module
// + check_equivariance, which the tests exploit.
AxiomReport check_lm_jacobi(const LMLieAlgebra& a);

// Leibniz algebra -> (L_Lie-module L -> L_Lie). A Lie input produces its
// adjoint module with identity delta. Guaranteed to pass check_lm_jacobi.
LMLieAlgebra lm_from_leibniz(const AlgebraPresentation& a);

// [u,v] := [u, delta(v)] on M; the other direction of the equivalence.
AlgebraPresentation leibniz_from_lm(const LMLieAlgebra& a);

} // namespace coquecigrue
