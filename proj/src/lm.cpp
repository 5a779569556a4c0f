#include "coquecigrue/lm.hpp"

#include "coquecigrue/errors.hpp"

#include <map>

namespace coquecigrue {

TensorBlocks lm_tensor(const LMObject& a, const LMObject& b) {
    TensorBlocks t;
    t.dim_v_a = a.dim_v;
    t.dim_w_a = a.dim_w;
    t.dim_v_b = b.dim_v;
    t.dim_w_b = b.dim_w;

    const std::size_t deg1 = a.dim_v * b.dim_w + a.dim_w * b.dim_v;
    const std::size_t deg0 = a.dim_w * b.dim_w;
    QMatrix delta(deg0, deg1);

    for (std::size_t v = 0; v < a.dim_v; ++v)
        for (std::size_t w2 = 0; w2 < b.dim_w; ++w2)
            for (std::size_t w = 0; w < a.dim_w; ++w)
                delta.at(t.deg0(w, w2), t.deg1_vw(v, w2)) = a.delta.at(w, v);
    for (std::size_t w = 0; w < a.dim_w; ++w)
        for (std::size_t v2 = 0; v2 < b.dim_v; ++v2)
            for (std::size_t w2 = 0; w2 < b.dim_w; ++w2)
                delta.at(t.deg0(w, w2), t.deg1_wv(w, v2)) = b.delta.at(w2, v2);

    t.object = LMObject{deg1, deg0, std::move(delta)};
    return t;
}

std::pair<QMatrix, QMatrix> interchange(const LMObject& a) {
    TensorBlocks t = lm_tensor(a, a);
    QMatrix tau1(t.object.dim_v, t.object.dim_v);
    QMatrix tau0(t.object.dim_w, t.object.dim_w);
    for (std::size_t v = 0; v < a.dim_v; ++v)
        for (std::size_t w = 0; w < a.dim_w; ++w) {
            tau1.at(t.deg1_wv(w, v), t.deg1_vw(v, w)) = 1;
            tau1.at(t.deg1_vw(v, w), t.deg1_wv(w, v)) = 1;
        }
    for (std::size_t w = 0; w < a.dim_w; ++w)
        for (std::size_t w2 = 0; w2 < a.dim_w; ++w2)
            tau0.at(t.deg0(w2, w), t.deg0(w, w2)) = 1;
    return {std::move(tau1), std::move(tau0)};
}

GradedPower lm_symmetric_power(const LMObject& a, unsigned k) {
    GradedPower p;
    p.deg0_basis = monomials_of_degree(a.dim_w, k);
    if (k >= 1)
        for (const auto& m : monomials_of_degree(a.dim_w, k - 1))
            for (std::size_t v = 0; v < a.dim_v; ++v)
                p.deg1_basis.emplace_back(m, v);

    std::map<PBWMonomial, std::size_t> deg0_index;
    for (std::size_t i = 0; i < p.deg0_basis.size(); ++i)
        deg0_index.emplace(p.deg0_basis[i], i);

    QMatrix delta(p.deg0_basis.size(), p.deg1_basis.size());
    for (std::size_t c = 0; c < p.deg1_basis.size(); ++c) {
        const auto& [m, v] = p.deg1_basis[c];
        for (std::size_t w = 0; w < a.dim_w; ++w) {
            if (a.delta.at(w, v) == 0)
                continue;
            PBWMonomial target = m;
            target.bump(w);
            delta.at(deg0_index.at(target), c) += a.delta.at(w, v);
        }
    }
    p.object = LMObject{p.deg1_basis.size(), p.deg0_basis.size(), std::move(delta)};
    return p;
}

namespace {

bool square_free(const PBWMonomial& m) {
    for (std::size_t i = 0; i < m.width(); ++i)
        if (m.exponent(i) > 1)
            return false;
    return true;
}

std::vector<PBWMonomial> square_free_monomials(std::size_t width, unsigned deg) {
    std::vector<PBWMonomial> out;
    for (const auto& m : monomials_of_degree(width, deg))
        if (square_free(m))
            out.push_back(m);
    return out;
}

} // namespace

GradedPower lm_exterior_power(const LMObject& a, unsigned k) {
    GradedPower p;
    p.deg0_basis = square_free_monomials(a.dim_w, k);
    if (k >= 1)
        for (const auto& m : square_free_monomials(a.dim_w, k - 1))
            for (std::size_t v = 0; v < a.dim_v; ++v)
                p.deg1_basis.emplace_back(m, v);

    std::map<PBWMonomial, std::size_t> deg0_index;
    for (std::size_t i = 0; i < p.deg0_basis.size(); ++i)
        deg0_index.emplace(p.deg0_basis[i], i);

    QMatrix delta(p.deg0_basis.size(), p.deg1_basis.size());
    for (std::size_t c = 0; c < p.deg1_basis.size(); ++c) {
        const auto& [m, v] = p.deg1_basis[c];
        for (std::size_t w = 0; w < a.dim_w; ++w) {
            if (a.delta.at(w, v) == 0 || m.exponent(w) > 0)
                continue;
            // append w on the right: the sign moves it past the larger letters
            unsigned larger = 0;
            for (std::size_t u = w + 1; u < m.width(); ++u)
                larger += m.exponent(u);
            PBWMonomial target = m;
            target.bump(w);
            Rational sign = larger % 2 == 0 ? 1 : -1;
            delta.at(deg0_index.at(target), c) += sign * a.delta.at(w, v);
        }
    }
    p.object = LMObject{p.deg1_basis.size(), p.deg0_basis.size(), std::move(delta)};
    return p;
}

RightModule::RightModule(std::vector<std::string> basis_names, std::size_t algebra_dim,
                         ActionTable table)
    : names_(std::move(basis_names)), algebra_dim_(algebra_dim) {
    for (auto& [key, value] : table) {
        if (key.first >= dim())
            throw ValidationError("action module index out of range");
        if (key.second >= algebra_dim_)
            throw ValidationError("action algebra index out of range");
        SparseVec cleaned;
        for (const auto& [idx, coeff] : value) {
            if (idx >= dim())
                throw ValidationError("action value index out of range");
            if (coeff != 0)
                cleaned.emplace(idx, coeff);
        }
        if (!cleaned.empty())
            table_.emplace(key, std::move(cleaned));
    }
}

const SparseVec& RightModule::action(std::size_t v, std::size_t i) const {
    static const SparseVec zero;
    auto it = table_.find({v, i});
    return it == table_.end() ? zero : it->second;
}

SparseVec RightModule::act(const SparseVec& m, const SparseVec& x) const {
    SparseVec out;
    for (const auto& [v, mv] : m)
        for (const auto& [i, xi] : x)
            axpy(out, mv * xi, action(v, i));
    return out;
}

SparseVec RightModule::act(const SparseVec& m, std::size_t i) const {
    SparseVec out;
    for (const auto& [v, mv] : m)
        axpy(out, mv, action(v, i));
    return out;
}

AxiomReport check_right_module(const RightModule& m, const AlgebraPresentation& g) {
    AxiomReport report;
    if (m.algebra_dim() != g.dim())
        throw ValidationError("module and algebra dimensions disagree");
    const auto& labels = m.basis_names();
    for (std::size_t v = 0; v < m.dim(); ++v)
        for (std::size_t x = 0; x < g.dim(); ++x)
            for (std::size_t y = 0; y < g.dim(); ++y) {
                SparseVec lhs = m.act(unit_vec(v), g.bracket(x, y));
                SparseVec rhs = vec_diff(m.act(m.action(v, x), y), m.act(m.action(v, y), x));
                if (lhs != rhs)
                    report.violations.push_back({"right-module",
                                                 {v, x, y},
                                                 vec_to_string(lhs, labels),
                                                 vec_to_string(rhs, labels)});
            }
    return report;
}

LMLieAlgebra::LMLieAlgebra(AlgebraPresentation g, RightModule m, QMatrix delta)
    : g_(std::move(g)), m_(std::move(m)), delta_(std::move(delta)) {
    if (m_.algebra_dim() != g_.dim())
        throw ValidationError("module action is over the wrong algebra dimension");
    if (delta_.rows() != g_.dim() || delta_.cols() != m_.dim())
        throw ValidationError("delta has the wrong shape");
}

LMLieAlgebra LMLieAlgebra::unchecked(AlgebraPresentation g, RightModule m, QMatrix delta) {
    return LMLieAlgebra(std::move(g), std::move(m), std::move(delta));
}

LMLieAlgebra LMLieAlgebra::checked(AlgebraPresentation g, RightModule m, QMatrix delta) {
    LMLieAlgebra a(std::move(g), std::move(m), std::move(delta));
    if (auto report = check_lie(a.lie()); !report.passed())
        throw NotLieError("degree-0 part is not a Lie algebra:\n" + report.to_string());
    if (auto report = check_right_module(a.module(), a.lie()); !report.passed())
        throw ValidationError("right module axiom fails:\n" + report.to_string());
    if (auto report = check_equivariance(a); !report.passed())
        throw ValidationError("delta is not equivariant:\n" + report.to_string());
    return a;
}

AxiomReport check_equivariance(const LMLieAlgebra& a) {
    AxiomReport report;
    const auto& labels = a.lie().basis_names();
    for (std::size_t v = 0; v < a.module().dim(); ++v)
        for (std::size_t x = 0; x < a.lie().dim(); ++x) {
            SparseVec lhs = a.delta_apply(a.module().action(v, x));
            SparseVec rhs = a.lie().bracket(a.delta_of(v), x);
            if (lhs != rhs)
                report.violations.push_back({"equivariance",
                                             {v, x},
                                             vec_to_string(lhs, labels),
                                             vec_to_string(rhs, labels)});
        }
    return report;
}

namespace {

// mu on the tensor square of (M -> g), blockwise:
//   degree 1, V(x)W block: m (x) x -> [m,x]
//   degree 1, W(x)V block: x (x) m -> -[m,x]
//   degree 0:              x (x) y -> [x,y]
struct Mu {
    const LMLieAlgebra& a;
    SparseVec mg(const SparseVec& m, const SparseVec& x) const { return a.module().act(m, x); }
    SparseVec gm(const SparseVec& x, const SparseVec& m) const {
        return scaled(a.module().act(m, x), Rational(-1));
    }
    SparseVec gg(const SparseVec& x, const SparseVec& y) const { return a.lie().bracket(x, y); }
};

} // namespace

AxiomReport check_lm_jacobi(const LMLieAlgebra& a) {
    AxiomReport report;
    const std::size_t n = a.lie().dim();
    const std::size_t mdim = a.module().dim();
    const auto& glabels = a.lie().basis_names();
    const auto& mlabels = a.module().basis_names();
    const Mu mu{a};

    // the bracket must be a morphism in the category: delta . mu1 = mu0 . delta_T
    LMObject obj = a.object();
    TensorBlocks t2 = lm_tensor(obj, obj);
    QMatrix mu1(mdim, t2.object.dim_v);
    QMatrix mu0(n, t2.object.dim_w);
    for (std::size_t v = 0; v < mdim; ++v)
        for (std::size_t x = 0; x < n; ++x) {
            for (const auto& [idx, c] : a.module().action(v, x)) {
                mu1.at(idx, t2.deg1_vw(v, x)) += c;
                mu1.at(idx, t2.deg1_wv(x, v)) -= c;
            }
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (const auto& [idx, c] : a.lie().bracket(x, y))
                mu0.at(idx, t2.deg0(x, y)) += c;

    QMatrix lhs1 = a.delta().mul(mu1);
    QMatrix rhs1 = mu0.mul(t2.object.delta);
    for (std::size_t v = 0; v < mdim; ++v)
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t col : {t2.deg1_vw(v, x), t2.deg1_wv(x, v)})
                if (lhs1.column(col) != rhs1.column(col))
                    report.violations.push_back({"bracket-morphism",
                                                 {v, x},
                                                 vec_to_string(lhs1.column(col), glabels),
                                                 vec_to_string(rhs1.column(col), glabels)});
        }

    // antisymmetry under the interchange, degree 0 and degree 1
    auto [tau1, tau0] = interchange(obj);
    QMatrix m1t = mu1.mul(tau1);
    QMatrix m0t = mu0.mul(tau0);
    for (std::size_t v = 0; v < mdim; ++v)
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t col = t2.deg1_vw(v, x);
            SparseVec lhs = m1t.column(col);
            SparseVec rhs = scaled(mu1.column(col), Rational(-1));
            if (lhs != rhs)
                report.violations.push_back({"interchange-antisymmetry",
                                             {v, x},
                                             vec_to_string(lhs, mlabels),
                                             vec_to_string(rhs, mlabels)});
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t col = t2.deg0(x, y);
            SparseVec lhs = m0t.column(col);
            SparseVec rhs = scaled(mu0.column(col), Rational(-1));
            if (lhs != rhs)
                report.violations.push_back({"interchange-antisymmetry",
                                             {x, y},
                                             vec_to_string(lhs, glabels),
                                             vec_to_string(rhs, glabels)});
        }

    // Jacobi, written mu(mu(p,q),r) = mu(mu(p,r),q) + mu(p,mu(q,r)) and
    // evaluated in the degree-0 block and all three degree-1 blocks of the
    // tensor cube (the V(x)V parts are gone by the categorical truncation).
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                SparseVec ex = unit_vec(x), ey = unit_vec(y), ez = unit_vec(z);
                SparseVec lhs = mu.gg(mu.gg(ex, ey), ez);
                SparseVec rhs = vec_sum(mu.gg(mu.gg(ex, ez), ey), mu.gg(ex, mu.gg(ey, ez)));
                if (lhs != rhs)
                    report.violations.push_back({"jacobi[ggg]",
                                                 {x, y, z},
                                                 vec_to_string(lhs, glabels),
                                                 vec_to_string(rhs, glabels)});
            }
    for (std::size_t v = 0; v < mdim; ++v)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                SparseVec ev = unit_vec(v), ey = unit_vec(y), ez = unit_vec(z);
                SparseVec lhs = mu.mg(mu.mg(ev, ey), ez);
                SparseVec rhs = vec_sum(mu.mg(mu.mg(ev, ez), ey), mu.mg(ev, mu.gg(ey, ez)));
                if (lhs != rhs)
                    report.violations.push_back({"jacobi[mgg]",
                                                 {v, y, z},
                                                 vec_to_string(lhs, mlabels),
                                                 vec_to_string(rhs, mlabels)});
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t v = 0; v < mdim; ++v)
            for (std::size_t z = 0; z < n; ++z) {
                SparseVec ex = unit_vec(x), ev = unit_vec(v), ez = unit_vec(z);
                SparseVec lhs = mu.mg(mu.gm(ex, ev), ez);
                SparseVec rhs = vec_sum(mu.gm(mu.gg(ex, ez), ev), mu.gm(ex, mu.mg(ev, ez)));
                if (lhs != rhs)
                    report.violations.push_back({"jacobi[gmg]",
                                                 {x, v, z},
                                                 vec_to_string(lhs, mlabels),
                                                 vec_to_string(rhs, mlabels)});
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t v = 0; v < mdim; ++v) {
                SparseVec ex = unit_vec(x), ey = unit_vec(y), ev = unit_vec(v);
                SparseVec lhs = mu.gm(mu.gg(ex, ey), ev);
                SparseVec rhs = vec_sum(mu.mg(mu.gm(ex, ev), ey), mu.gm(ex, mu.gm(ey, ev)));
                if (lhs != rhs)
                    report.violations.push_back({"jacobi[ggm]",
                                                 {x, y, v},
                                                 vec_to_string(lhs, mlabels),
                                                 vec_to_string(rhs, mlabels)});
            }
    return report;
}

LMLieAlgebra lm_from_leibniz(const AlgebraPresentation& a) {
    Liezation lz = liezation(a);
    const std::size_t n = a.dim();
    const std::size_t q = lz.quotient.dim();

    // The action of a class through any representative: the squares ideal
    // annihilates the right slot, so representatives cannot matter. Check
    // it anyway; a failure here is a bug, not a data error.
    for (const auto& row : lz.ideal_basis) {
        SparseVec w = to_sparse(row);
        for (std::size_t v = 0; v < n; ++v)
            if (!a.bracket(v, w).empty())
                throw IllDefinedActionError("squares ideal acts nontrivially on the right");
    }

    ActionTable action;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t r = 0; r < q; ++r) {
            SparseVec img = a.bracket(v, lz.kept[r]);
            if (!img.empty())
                action.emplace(std::make_pair(v, r), std::move(img));
        }
    RightModule m(a.basis_names(), q, std::move(action));
    return LMLieAlgebra::checked(std::move(lz.quotient), std::move(m), std::move(lz.projection));
}

AlgebraPresentation leibniz_from_lm(const LMLieAlgebra& a) {
    BracketTable table;
    for (std::size_t u = 0; u < a.module().dim(); ++u)
        for (std::size_t v = 0; v < a.module().dim(); ++v) {
            SparseVec img = a.module().act(unit_vec(u), a.delta_of(v));
            if (!img.empty())
                table.emplace(std::make_pair(u, v), std::move(img));
        }
    AlgebraPresentation out(a.module().basis_names(), std::move(table));
    if (!check_leibniz(out).passed())
        throw InternalError("leibniz_from_lm produced a non-Leibniz bracket");
    return out;
}

} // namespace coquecigrue
