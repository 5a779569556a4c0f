#include "coquecigrue/algebra.hpp"

#include "coquecigrue/errors.hpp"

namespace coquecigrue {

std::string AxiomReport::to_string() const {
    if (passed())
        return "ok";
    std::string out;
    for (const auto& v : violations) {
        out += v.axiom + " fails at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(v.witness[i]);
        }
        out += "): " + v.lhs + " != " + v.rhs + "\n";
    }
    return out;
}

AlgebraPresentation::AlgebraPresentation(std::vector<std::string> basis_names, BracketTable table)
    : names_(std::move(basis_names)) {
    for (auto& [key, value] : table) {
        if (key.first >= dim() || key.second >= dim())
            throw ValidationError("bracket index out of range");
        SparseVec cleaned;
        for (const auto& [idx, coeff] : value) {
            if (idx >= dim())
                throw ValidationError("bracket value index out of range");
            if (coeff != 0)
                cleaned.emplace(idx, coeff);
        }
        if (!cleaned.empty())
            table_.emplace(key, std::move(cleaned));
    }
}

const SparseVec& AlgebraPresentation::bracket(std::size_t i, std::size_t j) const {
    static const SparseVec zero;
    auto it = table_.find({i, j});
    return it == table_.end() ? zero : it->second;
}

SparseVec AlgebraPresentation::bracket(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, xi] : x)
        for (const auto& [j, yj] : y)
            axpy(out, xi * yj, bracket(i, j));
    return out;
}

SparseVec AlgebraPresentation::bracket(std::size_t i, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [j, yj] : y)
        axpy(out, yj, bracket(i, j));
    return out;
}

SparseVec AlgebraPresentation::bracket(const SparseVec& x, std::size_t j) const {
    SparseVec out;
    for (const auto& [i, xi] : x)
        axpy(out, xi, bracket(i, j));
    return out;
}

AxiomReport check_leibniz(const AlgebraPresentation& a) {
    AxiomReport report;
    const auto& labels = a.basis_names();
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < a.dim(); ++y)
            for (std::size_t z = 0; z < a.dim(); ++z) {
                SparseVec lhs = a.bracket(a.bracket(x, y), z);
                SparseVec rhs = vec_sum(a.bracket(a.bracket(x, z), y),
                                        a.bracket(x, a.bracket(y, z)));
                if (lhs != rhs)
                    report.violations.push_back({"leibniz",
                                                 {x, y, z},
                                                 vec_to_string(lhs, labels),
                                                 vec_to_string(rhs, labels)});
            }
    return report;
}

AxiomReport check_lie(const AlgebraPresentation& a) {
    AxiomReport report;
    const auto& labels = a.basis_names();
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = x; y < a.dim(); ++y) {
            SparseVec lhs = a.bracket(x, y);
            SparseVec rhs = scaled(a.bracket(y, x), Rational(-1));
            if (lhs != rhs)
                report.violations.push_back({"antisymmetry",
                                             {x, y},
                                             vec_to_string(lhs, labels),
                                             vec_to_string(rhs, labels)});
        }
    auto leibniz = check_leibniz(a);
    for (auto& v : leibniz.violations) {
        v.axiom = "jacobi";
        report.violations.push_back(std::move(v));
    }
    return report;
}

Liezation liezation(const AlgebraPresentation& a) {
    if (auto report = check_leibniz(a); !report.passed())
        throw NotLeibnizError("liezation needs a Leibniz algebra:\n" + report.to_string());

    const std::size_t n = a.dim();

    // The squares ideal is spanned by [x,y]+[y,x]; the right slot of any
    // bracket kills it, so closing under left brackets suffices. Iterate
    // anyway until stable, which also covers the left closure.
    RowSpace ideal(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            ideal.insert(to_dense(vec_sum(a.bracket(i, j), a.bracket(j, i)), n));
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = ideal.rows();
        for (const auto& row : snapshot) {
            SparseVec v = to_sparse(row);
            for (std::size_t i = 0; i < n; ++i) {
                if (ideal.insert(to_dense(a.bracket(i, v), n)))
                    grew = true;
                if (ideal.insert(to_dense(a.bracket(v, i), n)))
                    grew = true;
            }
        }
    }

    // Quotient basis: the non-pivot columns, keeping their original labels.
    std::vector<std::size_t> kept;
    {
        const auto& piv = ideal.pivots();
        std::size_t p = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (p < piv.size() && piv[p] == c)
                ++p;
            else
                kept.push_back(c);
        }
    }
    const std::size_t q = kept.size();

    QMatrix projection(q, n);
    for (std::size_t c = 0; c < n; ++c) {
        auto rem = ideal.reduce(to_dense(unit_vec(c), n));
        for (std::size_t r = 0; r < q; ++r)
            projection.at(r, c) = rem[kept[r]];
    }

    std::vector<std::string> names;
    names.reserve(q);
    for (std::size_t c : kept)
        names.push_back(a.basis_names()[c]);

    BracketTable table;
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t s = 0; s < q; ++s) {
            SparseVec img = projection.apply(a.bracket(kept[r], kept[s]));
            if (!img.empty())
                table.emplace(std::make_pair(r, s), std::move(img));
        }

    Liezation out{AlgebraPresentation(std::move(names), std::move(table)), std::move(projection),
                  std::move(kept), ideal.rows()};

    if (!check_lie(out.quotient).passed())
        throw InternalError("liezation produced a non-Lie quotient");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparseVec lhs = out.projection.apply(a.bracket(i, j));
            SparseVec rhs = out.quotient.bracket(out.projection.apply(unit_vec(i)),
                                                 out.projection.apply(unit_vec(j)));
            if (lhs != rhs)
                throw InternalError("liezation projection is not a bracket morphism");
        }
    return out;
}

} // namespace coquecigrue
