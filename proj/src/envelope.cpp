#include "coquecigrue/envelope.hpp"

#include "coquecigrue/errors.hpp"

#include <algorithm>
#include <thread>

namespace coquecigrue {

void add_term(BimoduleElement& dst, const PBWMonomial& m, const SparseVec& v, const Rational& c) {
    if (c == 0 || v.empty())
        return;
    auto& slot = dst[m];
    axpy(slot, c, v);
    if (slot.empty())
        dst.erase(m);
}

void add_scaled(BimoduleElement& dst, const BimoduleElement& src, const Rational& c) {
    for (const auto& [m, v] : src)
        add_term(dst, m, v, c);
}

std::string bimodule_to_string(const BimoduleElement& b, std::span<const std::string> glabels,
                               std::span<const std::string> mlabels) {
    if (b.empty())
        return "0";
    std::string out;
    for (const auto& [m, v] : b) {
        if (!out.empty())
            out += " + ";
        out += m.to_string(glabels) + " (x) (" + vec_to_string(v, mlabels) + ")";
    }
    return out;
}

std::string trivialization_name(Trivialization t) {
    return t == Trivialization::LEFT ? "left" : "sym";
}

LMEnveloping::LMEnveloping(LMLieAlgebra a) : a_(std::move(a)), uea_(a_.lie()) {}

BimoduleElement LMEnveloping::generator(std::size_t v) const {
    BimoduleElement b;
    add_term(b, PBWMonomial(uea_.width()), unit_vec(v));
    return b;
}

BimoduleElement LMEnveloping::left_act(const UEAElement& h, const BimoduleElement& b,
                                       std::optional<unsigned> cutoff) const {
    BimoduleElement out;
    for (const auto& [gamma, c] : h)
        for (const auto& [beta, vec] : b)
            for (const auto& [m, cm] : uea_.mul(gamma, beta)) {
                if (cutoff && m.degree() > *cutoff)
                    continue;
                add_term(out, m, vec, c * cm);
            }
    return out;
}

BimoduleElement LMEnveloping::right_act_letter(const BimoduleElement& b, std::size_t letter) const {
    BimoduleElement out;
    for (const auto& [beta, vec] : b) {
        for (const auto& [m, cm] : uea_.mul(beta, PBWMonomial::generator(uea_.width(), letter)))
            add_term(out, m, vec, cm);
        add_term(out, beta, a_.module().act(vec, letter));
    }
    return out;
}

BimoduleElement LMEnveloping::right_act(const BimoduleElement& b, const UEAElement& h,
                                        std::optional<unsigned> cutoff) const {
    BimoduleElement out;
    for (const auto& [gamma, c] : h) {
        BimoduleElement acc = b;
        for (std::size_t letter : gamma.word())
            acc = right_act_letter(acc, letter);
        add_scaled(out, acc, c);
    }
    if (cutoff)
        std::erase_if(out, [&](const auto& kv) { return kv.first.degree() > *cutoff; });
    return out;
}

UEAElement LMEnveloping::delta_env(const BimoduleElement& b) const {
    UEAElement out;
    for (const auto& [beta, vec] : b) {
        UEAElement h{{beta, Rational(1)}};
        add_scaled(out, uea_.mul(h, uea_.from_vector(a_.delta_apply(vec))), Rational(1));
    }
    return out;
}

BimoduleElement LMEnveloping::dialg_left(const BimoduleElement& x, const BimoduleElement& y) const {
    return right_act(x, delta_env(y));
}

BimoduleElement LMEnveloping::dialg_right(const BimoduleElement& x,
                                          const BimoduleElement& y) const {
    return left_act(delta_env(x), y);
}

BimoduleElement LMEnveloping::symmetrize(const PBWMonomial& beta, std::size_t v,
                                         Trivialization t) const {
    auto key = std::make_tuple(beta, v, static_cast<int>(t));
    if (auto it = sym_cache_.find(key); it != sym_cache_.end())
        return it->second;

    BimoduleElement result;
    if (t == Trivialization::LEFT) {
        for (const auto& [m, c] : uea_.symmetrize(beta))
            add_term(result, m, unit_vec(v), c);
    } else {
        // average over all interleavings of the letters with the module
        // generator, the letters to its left multiplying, the ones to its
        // right acting
        const std::size_t marker = uea_.width();
        Word symbols = beta.word();
        symbols.push_back(marker); // sorted: marker compares greatest
        BigInt count = 0;
        do {
            auto mark = std::find(symbols.begin(), symbols.end(), marker);
            Word prefix(symbols.begin(), mark);
            Word suffix(mark + 1, symbols.end());
            BimoduleElement val = generator(v);
            for (std::size_t letter : suffix)
                val = right_act_letter(val, letter);
            val = left_act(uea_.normalize(prefix), val);
            add_scaled(result, val, Rational(1));
            ++count;
        } while (std::next_permutation(symbols.begin(), symbols.end()));
        BimoduleElement scaled_result;
        add_scaled(scaled_result, result, Rational(BigInt(1), count));
        result = std::move(scaled_result);
    }
    return sym_cache_.emplace(std::move(key), std::move(result)).first->second;
}

BimoduleElement LMEnveloping::symmetrize(const SymModuleElement& s, Trivialization t) const {
    BimoduleElement out;
    for (const auto& [beta, vec] : s)
        for (const auto& [v, c] : vec)
            add_scaled(out, symmetrize(beta, v, t), c);
    return out;
}

SymModuleElement LMEnveloping::desymmetrize(const BimoduleElement& b, Trivialization t) const {
    // the trivializations fix beta (x) v up to lower monomial degree, so
    // the same top-peeling as for sigma on U(g) inverts them
    SymModuleElement out;
    BimoduleElement rem = b;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        PBWMonomial beta = top->first;
        SparseVec vec = top->second;
        for (const auto& [v, c] : vec) {
            add_term(out, beta, unit_vec(v), c);
            add_scaled(rem, symmetrize(beta, v, t), -c);
        }
    }
    return out;
}

SparseVec LMEnveloping::primitive_part(const BimoduleElement& b, Trivialization t) const {
    SymModuleElement s = desymmetrize(b, t);
    auto it = s.find(PBWMonomial(uea_.width()));
    return it == s.end() ? SparseVec{} : it->second;
}

AxiomReport LMEnveloping::check_dialgebra(unsigned degree_bound) const {
    // beta (x) m has degree |beta| + 1, the grading delta_env preserves
    const std::size_t mdim = a_.module().dim();
    std::vector<std::pair<PBWMonomial, std::size_t>> span;
    if (degree_bound >= 1)
        for (const auto& m : monomials_up_to(uea_.width(), degree_bound - 1))
            for (std::size_t v = 0; v < mdim; ++v)
                span.emplace_back(m, v);
    const std::size_t n = span.size();

    std::vector<BimoduleElement> elem(n);
    for (std::size_t i = 0; i < n; ++i)
        add_term(elem[i], span[i].first, unit_vec(span[i].second));

    std::vector<UEAElement> d(n);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = delta_env(elem[i]);

    std::vector<std::vector<BimoduleElement>> P(n, std::vector<BimoduleElement>(n));
    std::vector<std::vector<BimoduleElement>> Q(n, std::vector<BimoduleElement>(n));
    std::vector<std::vector<UEAElement>> dP(n, std::vector<UEAElement>(n));
    std::vector<std::vector<UEAElement>> dQ(n, std::vector<UEAElement>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            P[i][j] = right_act(elem[i], d[j]);
            Q[i][j] = left_act(d[i], elem[j]);
            dP[i][j] = delta_env(P[i][j]);
            dQ[i][j] = delta_env(Q[i][j]);
        }

    const auto& glabels = a_.lie().basis_names();
    const auto& mlabels = a_.module().basis_names();

    auto run_range = [&](const LMEnveloping& eng, std::size_t lo, std::size_t hi,
                         std::vector<AxiomViolation>& sink) {
        auto mismatch = [&](const char* axiom, std::size_t x, std::size_t y, std::size_t z,
                            const BimoduleElement& lhs, const BimoduleElement& rhs) {
            if (lhs != rhs)
                sink.push_back({axiom,
                                {x, y, z},
                                bimodule_to_string(lhs, glabels, mlabels),
                                bimodule_to_string(rhs, glabels, mlabels)});
        };
        for (std::size_t x = lo; x < hi; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    BimoduleElement a1 = eng.right_act(P[x][y], d[z]);
                    mismatch("left-left-assoc", x, y, z, a1, eng.right_act(elem[x], dP[y][z]));
                    mismatch("left-absorbs-right", x, y, z, a1,
                             eng.right_act(elem[x], dQ[y][z]));
                    mismatch("middle-assoc", x, y, z, eng.right_act(Q[x][y], d[z]),
                             eng.left_act(d[x], P[y][z]));
                    BimoduleElement a4 = eng.left_act(dQ[x][y], elem[z]);
                    mismatch("right-absorbs-left", x, y, z, eng.left_act(dP[x][y], elem[z]), a4);
                    mismatch("right-right-assoc", x, y, z, a4, eng.left_act(d[x], Q[y][z]));
                }
    };

    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nthreads = std::max<std::size_t>(1, std::min<std::size_t>(hw ? hw : 1, n));
    AxiomReport report;
    if (nthreads <= 1 || n < 16) {
        run_range(*this, 0, n, report.violations);
        return report;
    }

    // straightening memos are per-engine, so each worker gets a copy of
    // this engine (warm from the precomputation above)
    std::vector<std::vector<AxiomViolation>> sinks(nthreads);
    std::vector<LMEnveloping> engines(nthreads, *this);
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < nthreads; ++t) {
        std::size_t lo = n * t / nthreads;
        std::size_t hi = n * (t + 1) / nthreads;
        workers.emplace_back(
            [&, t, lo, hi] { run_range(engines[t], lo, hi, sinks[t]); });
    }
    for (auto& w : workers)
        w.join();
    for (auto& sink : sinks)
        for (auto& v : sink)
            report.violations.push_back(std::move(v));
    return report;
}

} // namespace coquecigrue
