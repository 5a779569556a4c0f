#include "coquecigrue/formal_group.hpp"

#include "coquecigrue/errors.hpp"

#include <functional>

namespace coquecigrue {

namespace {

using Poly = std::map<PBWMonomial, Rational>;

void poly_add(Poly& dst, const PBWMonomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto it = dst.find(m);
    if (it == dst.end())
        dst.emplace(m, c);
    else {
        it->second += c;
        if (it->second == 0)
            dst.erase(it);
    }
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned maxdeg) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (ma.degree() + mb.degree() > maxdeg)
                continue;
            poly_add(out, ma * mb, ca * cb);
        }
    return out;
}

PBWMonomial embed(const PBWMonomial& m, std::size_t offset, std::size_t total) {
    PBWMonomial out(total);
    for (std::size_t i = 0; i < m.width(); ++i)
        if (m.exponent(i) > 0)
            out.bump(offset + i, m.exponent(i));
    return out;
}

Rational inverse_factorials(const PBWMonomial& a, const PBWMonomial& b) {
    return Rational(BigInt(1), monomial_factorial(a) * monomial_factorial(b));
}

} // namespace

SeriesMap integrate_lie(const AlgebraPresentation& g, unsigned order) {
    if (order < 1)
        throw OrderMismatchError("integration order must be at least 1");
    UniversalEnveloping uea(g);
    const std::size_t n = g.dim();
    SeriesMap f{order, n, n, n, {}};
    for (const auto& alpha : monomials_up_to(n, order)) {
        UEAElement sa = uea.symmetrize(alpha);
        for (const auto& beta : monomials_up_to(n, order - alpha.degree())) {
            if (alpha.degree() + beta.degree() == 0)
                continue;
            SparseVec prim = uea.primitive_part(uea.mul(sa, uea.symmetrize(beta)));
            if (prim.empty())
                continue;
            f.coeffs.emplace(std::make_pair(alpha, beta),
                             scaled(prim, inverse_factorials(alpha, beta)));
        }
    }
    return f;
}

namespace {

// vector-valued polynomial in two commuting groups of variables
using BiKey = std::pair<PBWMonomial, PBWMonomial>;
using BiPoly = std::map<BiKey, SparseVec>;

BiPoly bi_bracket(const AlgebraPresentation& g, const BiPoly& p, const BiPoly& q, unsigned order) {
    BiPoly out;
    for (const auto& [k1, v1] : p)
        for (const auto& [k2, v2] : q) {
            if (k1.first.degree() + k1.second.degree() + k2.first.degree() +
                    k2.second.degree() >
                order)
                continue;
            SparseVec val = g.bracket(v1, v2);
            if (val.empty())
                continue;
            auto key = std::make_pair(k1.first * k2.first, k1.second * k2.second);
            auto& slot = out[key];
            axpy(slot, Rational(1), val);
            if (slot.empty())
                out.erase(key);
        }
    return out;
}

} // namespace

SeriesMap cbh_dynkin(const AlgebraPresentation& g, unsigned order) {
    if (order < 1)
        throw OrderMismatchError("integration order must be at least 1");
    if (auto report = check_lie(g); !report.passed())
        throw NotLieError("commutator series needs a Lie algebra:\n" + report.to_string());

    const std::size_t n = g.dim();
    BiPoly x, y;
    for (std::size_t i = 0; i < n; ++i) {
        x.emplace(std::make_pair(PBWMonomial::generator(n, i), PBWMonomial(n)), unit_vec(i));
        y.emplace(std::make_pair(PBWMonomial(n), PBWMonomial::generator(n, i)), unit_vec(i));
    }

    BiPoly acc;
    std::vector<std::pair<unsigned, unsigned>> blocks;

    auto emit = [&]() {
        const auto [pk, qk] = blocks.back();
        // the right-nested bracket of x^p1 y^q1 ... x^pk y^qk dies when the
        // word ends in a repeated letter
        BiPoly e;
        if (qk >= 2)
            return;
        if (qk == 1)
            e = y;
        else if (pk == 1)
            e = x;
        else
            return;
        if (qk == 1)
            for (unsigned s = 0; s < pk && !e.empty(); ++s)
                e = bi_bracket(g, x, e, order);
        for (std::size_t i = blocks.size() - 1; i-- > 0;) {
            for (unsigned s = 0; s < blocks[i].second && !e.empty(); ++s)
                e = bi_bracket(g, y, e, order);
            for (unsigned s = 0; s < blocks[i].first && !e.empty(); ++s)
                e = bi_bracket(g, x, e, order);
        }
        if (e.empty())
            return;
        unsigned weight = 0;
        BigInt fac = 1;
        for (const auto& [p, q] : blocks) {
            weight += p + q;
            fac *= factorial(p) * factorial(q);
        }
        const std::size_t k = blocks.size();
        Rational coeff(BigInt(k % 2 == 1 ? 1 : -1), BigInt(k) * weight * fac);
        for (const auto& [key, vec] : e) {
            auto& slot = acc[key];
            axpy(slot, coeff, vec);
            if (slot.empty())
                acc.erase(key);
        }
    };

    std::function<void(unsigned)> extend = [&](unsigned total) {
        for (unsigned s = 1; total + s <= order; ++s)
            for (unsigned p = 0; p <= s; ++p) {
                blocks.emplace_back(p, s - p);
                emit();
                extend(total + s);
                blocks.pop_back();
            }
    };
    extend(0);

    SeriesMap f{order, n, n, n, {}};
    for (auto& [key, vec] : acc)
        if (!vec.empty())
            f.coeffs.emplace(key, std::move(vec));
    return f;
}

LMFormalGroup integrate_lm(const LMLieAlgebra& a, unsigned order, Trivialization triv) {
    if (order < 1)
        throw OrderMismatchError("integration order must be at least 1");
    LMFormalGroup g;
    g.order = order;
    g.trivialization = triv;
    g.f = integrate_lie(a.lie(), order);

    LMEnveloping env(a);
    const auto& uea = env.uea();
    const std::size_t n = a.lie().dim();
    const std::size_t m = a.module().dim();
    g.g1 = G1Series{order, n, m, {}};
    g.g2 = G2Series{order, m, n, {}};

    for (const auto& beta : monomials_up_to(n, order - 1)) {
        Rational bfac(BigInt(1), monomial_factorial(beta));
        UEAElement sbeta = uea.symmetrize(beta);
        for (std::size_t v = 0; v < m; ++v) {
            BimoduleElement left_base = env.symmetrize(beta, v, triv);
            BimoduleElement right_base = env.right_act(env.generator(v), sbeta);
            for (const auto& alpha : monomials_up_to(n, order - 1 - beta.degree())) {
                Rational fac = bfac / Rational(monomial_factorial(alpha));
                UEAElement salpha = uea.symmetrize(alpha);

                SparseVec lvec =
                    scaled(env.primitive_part(env.left_act(salpha, left_base), triv), fac);
                if (!lvec.empty())
                    g.g1.coeffs.emplace(std::make_tuple(alpha, v, beta), std::move(lvec));

                SparseVec rvec =
                    scaled(env.primitive_part(env.left_act(salpha, right_base), triv), fac);
                if (rvec.empty())
                    continue;
                if (alpha.degree() == 0)
                    g.g2.coeffs.emplace(std::make_pair(v, beta), std::move(rvec));
                else
                    g.alpha_dependence.emplace(std::make_tuple(alpha, v, beta), std::move(rvec));
            }
        }
    }
    return g;
}

namespace {

void add_g2(G2Series& s, std::size_t v, const PBWMonomial& m, const SparseVec& vec,
            const Rational& c) {
    if (c == 0 || vec.empty())
        return;
    auto key = std::make_pair(v, m);
    auto& slot = s.coeffs[key];
    axpy(slot, c, vec);
    if (slot.empty())
        s.coeffs.erase(key);
}

} // namespace

G2Series compose_series(const G2Series& outer, const G2Series& inner, unsigned order) {
    if (outer.order < order || inner.order < order)
        throw OrderMismatchError("composition order exceeds the series order");
    if (outer.n_m != inner.n_m)
        throw ValidationError("composed series live over different modules");
    const std::size_t total = inner.n_y + outer.n_y;
    G2Series out{order, outer.n_m, total, {}};
    for (const auto& [ikey, w] : inner.coeffs) {
        const auto& [v, beta] = ikey;
        if (1 + beta.degree() > order)
            continue;
        for (const auto& [okey, r] : outer.coeffs) {
            const auto& [u, gamma] = okey;
            if (1 + beta.degree() + gamma.degree() > order)
                continue;
            auto wu = w.find(u);
            if (wu == w.end())
                continue;
            PBWMonomial mono = embed(beta, 0, total) * embed(gamma, inner.n_y, total);
            add_g2(out, v, mono, r, wu->second);
        }
    }
    return out;
}

G2Series compose_series(const G2Series& outer, const SeriesMap& inner, unsigned order) {
    if (outer.order < order || inner.order < order)
        throw OrderMismatchError("composition order exceeds the series order");
    if (outer.n_y != inner.n_out)
        throw ValidationError("series output does not match the substituted variables");
    const std::size_t total = inner.n_in1 + inner.n_in2;

    std::vector<Poly> component(inner.n_out);
    for (const auto& [key, vec] : inner.coeffs) {
        PBWMonomial mono = embed(key.first, 0, total) * embed(key.second, inner.n_in1, total);
        for (const auto& [i, c] : vec)
            poly_add(component[i], mono, c);
    }

    G2Series out{order, outer.n_m, total, {}};
    for (const auto& [key, r] : outer.coeffs) {
        const auto& [v, d] = key;
        if (1 + d.degree() > order)
            continue;
        Poly prod{{PBWMonomial(total), Rational(1)}};
        for (std::size_t i = 0; i < d.width() && !prod.empty(); ++i)
            for (unsigned s = 0; s < d.exponent(i); ++s)
                prod = poly_mul(prod, component[i], order - 1);
        for (const auto& [mono, c] : prod)
            add_g2(out, v, mono, r, c);
    }
    return out;
}

namespace {

std::vector<std::string> block_labels(std::size_t n, std::initializer_list<char> prefixes) {
    std::vector<std::string> labels;
    for (char p : prefixes)
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back(std::string(1, p) + std::to_string(i));
    return labels;
}

} // namespace

AxiomReport verify_formal_group(const SeriesMap& f, unsigned order) {
    if (f.n_in1 != f.n_out || f.n_in2 != f.n_out)
        throw ValidationError("a formal group law needs both inputs equal to the output space");
    if (f.order < order)
        throw OrderMismatchError("verification order exceeds the series order");

    AxiomReport report;
    const std::size_t n = f.n_out;
    auto labels = block_labels(n, {'x', 'y', 'z'});
    auto out_labels = block_labels(n, {'e'});

    // f(x, 0) = x and f(0, y) = y
    for (int side = 0; side < 2; ++side) {
        std::map<PBWMonomial, SparseVec> got;
        for (const auto& [key, vec] : f.coeffs) {
            const PBWMonomial& live = side == 0 ? key.first : key.second;
            const PBWMonomial& dead = side == 0 ? key.second : key.first;
            if (dead.degree() == 0)
                got.emplace(live, vec);
        }
        std::map<PBWMonomial, SparseVec> want;
        for (std::size_t i = 0; i < n; ++i)
            want.emplace(PBWMonomial::generator(n, i), unit_vec(i));
        if (got != want) {
            for (const auto& [mono, vec] : got) {
                auto it = want.find(mono);
                if (it == want.end() || it->second != vec)
                    report.violations.push_back(
                        {side == 0 ? "left-unit" : "right-unit",
                         {},
                         mono.to_string(std::span<const std::string>(labels).subspan(
                             side == 0 ? 0 : n, n)) +
                             ": " + vec_to_string(vec, out_labels),
                         it == want.end() ? "0" : vec_to_string(it->second, out_labels)});
            }
            for (const auto& [mono, vec] : want)
                if (!got.contains(mono))
                    report.violations.push_back(
                        {side == 0 ? "left-unit" : "right-unit",
                         {},
                         mono.to_string(std::span<const std::string>(labels).subspan(
                             side == 0 ? 0 : n, n)) +
                             ": 0",
                         vec_to_string(vec, out_labels)});
        }
    }

    // associativity in three blocks of variables
    const std::size_t total = 3 * n;
    auto identity_block = [&](std::size_t offset) {
        std::vector<Poly> polys(n);
        for (std::size_t i = 0; i < n; ++i)
            polys[i] = Poly{{PBWMonomial::generator(total, offset + i), Rational(1)}};
        return polys;
    };
    auto series_block = [&](std::size_t off1, std::size_t off2) {
        std::vector<Poly> polys(n);
        for (const auto& [key, vec] : f.coeffs) {
            PBWMonomial mono = embed(key.first, off1, total) * embed(key.second, off2, total);
            for (const auto& [i, c] : vec)
                poly_add(polys[i], mono, c);
        }
        return polys;
    };
    auto substitute = [&](const std::vector<Poly>& s1, const std::vector<Poly>& s2) {
        std::map<PBWMonomial, SparseVec> out;
        for (const auto& [key, vec] : f.coeffs) {
            Poly prod{{PBWMonomial(total), Rational(1)}};
            for (std::size_t i = 0; i < n && !prod.empty(); ++i)
                for (unsigned s = 0; s < key.first.exponent(i); ++s)
                    prod = poly_mul(prod, s1[i], order);
            for (std::size_t i = 0; i < n && !prod.empty(); ++i)
                for (unsigned s = 0; s < key.second.exponent(i); ++s)
                    prod = poly_mul(prod, s2[i], order);
            for (const auto& [mono, c] : prod) {
                auto& slot = out[mono];
                axpy(slot, c, vec);
                if (slot.empty())
                    out.erase(mono);
            }
        }
        return out;
    };

    auto lhs = substitute(series_block(0, n), identity_block(2 * n));
    auto rhs = substitute(identity_block(0), series_block(n, 2 * n));
    for (const auto& [mono, vec] : lhs) {
        auto it = rhs.find(mono);
        if (it == rhs.end() || it->second != vec)
            report.violations.push_back({"associativity",
                                         {},
                                         mono.to_string(labels) + ": " +
                                             vec_to_string(vec, out_labels),
                                         it == rhs.end() ? "0"
                                                         : vec_to_string(it->second, out_labels)});
    }
    for (const auto& [mono, vec] : rhs)
        if (!lhs.contains(mono))
            report.violations.push_back(
                {"associativity", {}, mono.to_string(labels) + ": 0", vec_to_string(vec, out_labels)});
    return report;
}

bool LMIntegrationReport::asserted_ok() const {
    for (const auto& c : claims)
        if (c.asserted && c.applicable && !c.passed)
            return false;
    return true;
}

const ClaimResult* LMIntegrationReport::find(const std::string& name) const {
    for (const auto& c : claims)
        if (c.name == name)
            return &c;
    return nullptr;
}

LMIntegrationReport verify_lm_integration(const LMFormalGroup& g, const LMLieAlgebra& a,
                                          unsigned order) {
    if (g.order < order)
        throw OrderMismatchError("verification order exceeds the integration order");
    LMIntegrationReport report;
    report.trivialization = g.trivialization;
    const bool left = g.trivialization == Trivialization::LEFT;
    const std::size_t n = a.lie().dim();
    const std::size_t m = a.module().dim();
    const auto& glabels = a.lie().basis_names();
    const auto& mlabels = a.module().basis_names();

    auto key_string = [&](const PBWMonomial& alpha, std::size_t v, const PBWMonomial& beta) {
        return "(" + alpha.to_string(glabels) + "; " + mlabels[v] + "; " + beta.to_string(glabels) +
               ")";
    };

    {
        ClaimResult c{"g1-is-generator", true, left, true, {}};
        std::map<std::tuple<PBWMonomial, std::size_t, PBWMonomial>, SparseVec> want;
        for (std::size_t v = 0; v < m; ++v)
            want.emplace(std::make_tuple(PBWMonomial(n), v, PBWMonomial(n)), unit_vec(v));
        for (const auto& [key, vec] : g.g1.coeffs) {
            auto it = want.find(key);
            if (it == want.end() || it->second != vec)
                c.discrepancies.push_back(key_string(std::get<0>(key), std::get<1>(key),
                                                     std::get<2>(key)) +
                                          " -> " + vec_to_string(vec, mlabels));
        }
        for (const auto& [key, vec] : want)
            if (!g.g1.coeffs.contains(key))
                c.discrepancies.push_back(key_string(std::get<0>(key), std::get<1>(key),
                                                     std::get<2>(key)) +
                                          " missing, expected " + vec_to_string(vec, mlabels));
        c.passed = c.discrepancies.empty();
        report.claims.push_back(std::move(c));
    }

    {
        ClaimResult c{"g2-alpha-independent", true, left, true, {}};
        for (const auto& [key, vec] : g.alpha_dependence)
            c.discrepancies.push_back(
                key_string(std::get<0>(key), std::get<1>(key), std::get<2>(key)) + " -> " +
                vec_to_string(vec, mlabels));
        c.passed = c.discrepancies.empty();
        report.claims.push_back(std::move(c));
    }

    {
        ClaimResult c{"g2-associative", true, left, true, {}};
        G2Series nested = compose_series(g.g2, g.g2, order);
        G2Series direct = compose_series(g.g2, g.f, order);
        auto ylabels = block_labels(n, {'y', 'z'});
        auto describe = [&](const std::pair<std::size_t, PBWMonomial>& key, const SparseVec& lv,
                            const SparseVec& rv) {
            c.discrepancies.push_back("(" + mlabels[key.first] + "; " +
                                      key.second.to_string(ylabels) + "): nested " +
                                      vec_to_string(lv, mlabels) + ", direct " +
                                      vec_to_string(rv, mlabels));
        };
        for (const auto& [key, vec] : nested.coeffs) {
            auto it = direct.coeffs.find(key);
            if (it == direct.coeffs.end() || it->second != vec)
                describe(key, vec, it == direct.coeffs.end() ? SparseVec{} : it->second);
        }
        for (const auto& [key, vec] : direct.coeffs)
            if (!nested.coeffs.contains(key))
                describe(key, SparseVec{}, vec);
        c.passed = c.discrepancies.empty();
        report.claims.push_back(std::move(c));
    }

    {
        ClaimResult c{"g2-delta-compatible", true, !left, true, {}};
        UniversalEnveloping uea(a.lie());
        for (const auto& beta : monomials_up_to(n, order - 1)) {
            Rational bfac(monomial_factorial(beta));
            UEAElement sbeta = uea.symmetrize(beta);
            for (std::size_t v = 0; v < m; ++v) {
                auto it = g.g2.coeffs.find(std::make_pair(v, beta));
                SparseVec lhs = a.delta_apply(
                    it == g.g2.coeffs.end() ? SparseVec{} : scaled(it->second, bfac));
                SparseVec rhs =
                    uea.primitive_part(uea.mul(uea.from_vector(a.delta_of(v)), sbeta));
                if (lhs != rhs)
                    c.discrepancies.push_back("(" + mlabels[v] + "; " + beta.to_string(glabels) +
                                              "): delta side " + vec_to_string(lhs, glabels) +
                                              ", group side " + vec_to_string(rhs, glabels));
            }
        }
        c.passed = c.discrepancies.empty();
        report.claims.push_back(std::move(c));
    }

    {
        bool applicable = m == n && a.delta() == QMatrix::identity(n);
        ClaimResult c{"g2-equals-f-on-identity", applicable, !left, true, {}};
        if (applicable) {
            std::map<std::pair<std::size_t, PBWMonomial>, SparseVec> want;
            for (const auto& [key, vec] : g.f.coeffs)
                if (key.first.degree() == 1)
                    for (std::size_t v = 0; v < n; ++v)
                        if (key.first.exponent(v) == 1)
                            want.emplace(std::make_pair(v, key.second), vec);
            auto describe = [&](std::size_t v, const PBWMonomial& beta, const SparseVec& got,
                                const SparseVec& expect) {
                c.discrepancies.push_back("(" + mlabels[v] + "; " + beta.to_string(glabels) +
                                          "): g2 " + vec_to_string(got, mlabels) + ", f " +
                                          vec_to_string(expect, mlabels));
            };
            for (const auto& [key, vec] : g.g2.coeffs) {
                auto it = want.find(key);
                if (it == want.end() || it->second != vec)
                    describe(key.first, key.second, vec,
                             it == want.end() ? SparseVec{} : it->second);
            }
            for (const auto& [key, vec] : want)
                if (!g.g2.coeffs.contains(key))
                    describe(key.first, key.second, SparseVec{}, vec);
            c.passed = c.discrepancies.empty();
        }
        report.claims.push_back(std::move(c));
    }
    return report;
}

std::map<PBWMonomial, SPoly> extend_coalgebra_morphism(const SLinearMap& theta, std::size_t n_in,
                                                       std::size_t n_out, unsigned order) {
    for (const auto& [key, vec] : theta) {
        if (key.width() != n_in)
            throw ValidationError("theta key width does not match the input space");
        if (key.degree() == 0)
            throw ValidationError("theta must vanish in degree zero");
        for (const auto& [i, c] : vec)
            if (i >= n_out)
                throw ValidationError("theta value index out of range");
    }

    auto theta_poly = [&](const PBWMonomial& gamma) {
        SPoly p;
        if (auto it = theta.find(gamma); it != theta.end())
            for (const auto& [i, c] : it->second)
                poly_add(p, PBWMonomial::generator(n_out, i), c);
        return p;
    };

    // B(mu, k) = 1/k! sum over ordered splits of mu into k positive parts,
    // via B(mu, k) = 1/k sum_gamma C(mu, gamma) theta(gamma) B(mu-gamma, k-1)
    std::map<std::pair<PBWMonomial, unsigned>, SPoly> memo;
    std::function<const SPoly&(const PBWMonomial&, unsigned)> part =
        [&](const PBWMonomial& mu, unsigned k) -> const SPoly& {
        auto key = std::make_pair(mu, k);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        SPoly result;
        if (k == 0) {
            if (mu.degree() == 0)
                result.emplace(PBWMonomial(n_out), Rational(1));
        } else {
            for (const auto& gamma : monomials_up_to(n_in, mu.degree())) {
                if (gamma.degree() == 0 || !gamma.divides(mu))
                    continue;
                SPoly tp = theta_poly(gamma);
                if (tp.empty())
                    continue;
                Rational c = monomial_binomial(mu, gamma) / Rational(k);
                for (const auto& [mr, cr] : part(mu / gamma, k - 1))
                    for (const auto& [mt, ct] : tp)
                        poly_add(result, mr * mt, c * cr * ct);
            }
        }
        return memo.emplace(std::move(key), std::move(result)).first->second;
    };

    std::map<PBWMonomial, SPoly> out;
    for (const auto& mu : monomials_up_to(n_in, order)) {
        SPoly total;
        for (unsigned k = 0; k <= mu.degree(); ++k)
            for (const auto& [mono, c] : part(mu, k))
                poly_add(total, mono, c);
        out.emplace(mu, std::move(total));
    }
    return out;
}

std::map<LMSymBasis, LMSymElement> extend_coalgebra_morphism_deg1(
    const SLinearMap& theta0, const std::map<LMSymBasis, SparseVec>& theta1, std::size_t n_in_w,
    std::size_t n_in_v, std::size_t n_out_w, std::size_t n_out_v, unsigned order) {
    for (const auto& [key, vec] : theta1) {
        if (key.first.width() != n_in_w || key.second >= n_in_v)
            throw ValidationError("theta1 key does not match the input object");
        for (const auto& [i, c] : vec)
            if (i >= n_out_v)
                throw ValidationError("theta1 value index out of range");
    }
    auto theta0_ext = extend_coalgebra_morphism(theta0, n_in_w, n_out_w, order);

    std::map<LMSymBasis, LMSymElement> out;
    for (const auto& mu : monomials_up_to(n_in_w, order))
        for (std::size_t v = 0; v < n_in_v; ++v) {
            LMSymElement val;
            for (const auto& gamma : monomials_up_to(n_in_w, mu.degree())) {
                if (!gamma.divides(mu))
                    continue;
                auto it = theta1.find(std::make_pair(gamma, v));
                if (it == theta1.end())
                    continue;
                Rational c = monomial_binomial(mu, gamma);
                const SPoly& rest = theta0_ext.at(mu / gamma);
                for (const auto& [mono, cr] : rest)
                    for (const auto& [i, ci] : it->second) {
                        auto key = std::make_pair(mono, i);
                        auto slot = val.find(key);
                        if (slot == val.end())
                            val.emplace(std::move(key), c * cr * ci);
                        else {
                            slot->second += c * cr * ci;
                            if (slot->second == 0)
                                val.erase(slot);
                        }
                    }
            }
            out.emplace(std::make_pair(mu, v), std::move(val));
        }
    return out;
}

} // namespace coquecigrue
