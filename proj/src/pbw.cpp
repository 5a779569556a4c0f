#include "coquecigrue/pbw.hpp"

#include "coquecigrue/errors.hpp"

#include <algorithm>

namespace coquecigrue {

void add_term(UEAElement& dst, const PBWMonomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto it = dst.find(m);
    if (it == dst.end()) {
        dst.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            dst.erase(it);
    }
}

void add_scaled(UEAElement& dst, const UEAElement& src, const Rational& c) {
    if (c == 0)
        return;
    for (const auto& [m, v] : src)
        add_term(dst, m, c * v);
}

UEAElement uea_scaled(const UEAElement& u, const Rational& c) {
    UEAElement out;
    add_scaled(out, u, c);
    return out;
}

std::string uea_to_string(const UEAElement& u, std::span<const std::string> labels) {
    if (u.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : u) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        first = false;
        if (a != 1 || m.degree() == 0)
            out += rational_to_string(a);
        if (m.degree() > 0) {
            if (a != 1)
                out += "*";
            out += m.to_string(labels);
        }
    }
    return out;
}

UniversalEnveloping::UniversalEnveloping(AlgebraPresentation lie) : lie_(std::move(lie)) {
    if (auto report = check_lie(lie_); !report.passed())
        throw NotLieError("enveloping algebra needs a Lie algebra:\n" + report.to_string());
}

const UEAElement& UniversalEnveloping::normalize_cached(const Word& w, Straightening s) const {
    auto key = std::make_pair(w, static_cast<int>(s));
    if (auto it = word_cache_.find(key); it != word_cache_.end())
        return it->second;

    UEAElement result;
    std::size_t pos = w.size();
    if (s == Straightening::LeftmostFirst) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                pos = i;
                break;
            }
    } else {
        for (std::size_t i = w.size(); i >= 2; --i)
            if (w[i - 2] > w[i - 1]) {
                pos = i - 2;
                break;
            }
    }

    if (pos == w.size()) {
        result.emplace(PBWMonomial::from_word(width(), w), Rational(1));
    } else {
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        result = normalize_cached(swapped, s);
        // x_j x_i = x_i x_j + [x_j, x_i], substituted in place
        for (const auto& [letter, c] : lie_.bracket(w[pos], w[pos + 1])) {
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            shorter.push_back(letter);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
            add_scaled(result, normalize_cached(shorter, s), c);
        }
    }
    return word_cache_.emplace(std::move(key), std::move(result)).first->second;
}

UEAElement UniversalEnveloping::normalize(const Word& w, Straightening s) const {
    for (std::size_t letter : w)
        if (letter >= width())
            throw ValidationError("word letter out of range");
    return normalize_cached(w, s);
}

UEAElement UniversalEnveloping::mul(const PBWMonomial& a, const PBWMonomial& b) const {
    Word w = a.word();
    Word wb = b.word();
    w.insert(w.end(), wb.begin(), wb.end());
    return normalize_cached(w, Straightening::LeftmostFirst);
}

UEAElement UniversalEnveloping::mul(const UEAElement& a, const UEAElement& b,
                                    std::optional<unsigned> cutoff) const {
    UEAElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            add_scaled(out, mul(ma, mb), ca * cb);
    if (cutoff)
        std::erase_if(out, [&](const auto& kv) { return kv.first.degree() > *cutoff; });
    return out;
}

namespace {

void split_monomial(const PBWMonomial& m, std::size_t from, PBWMonomial& left, PBWMonomial& right,
                    const Rational& coeff, TensorElement& out) {
    if (from == m.width()) {
        auto key = std::make_pair(left, right);
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(std::move(key), coeff);
        else {
            it->second += coeff;
            if (it->second == 0)
                out.erase(it);
        }
        return;
    }
    unsigned a = m.exponent(from);
    for (unsigned b = 0; b <= a; ++b) {
        PBWMonomial l = left, r = right;
        if (b > 0)
            l.bump(from, b);
        if (a - b > 0)
            r.bump(from, a - b);
        split_monomial(m, from + 1, l, r, coeff * Rational(binomial(a, b)), out);
    }
}

} // namespace

TensorElement UniversalEnveloping::coproduct(const UEAElement& u) const {
    TensorElement out;
    for (const auto& [m, c] : u) {
        PBWMonomial left(m.width()), right(m.width());
        split_monomial(m, 0, left, right, c, out);
    }
    return out;
}

Rational UniversalEnveloping::counit(const UEAElement& u) {
    for (const auto& [m, c] : u)
        if (m.degree() == 0)
            return c;
    return Rational(0);
}

UEAElement UniversalEnveloping::symmetrize(const PBWMonomial& m) const {
    if (auto it = sigma_cache_.find(m); it != sigma_cache_.end())
        return it->second;
    Word w = m.word(); // ascending, the least permutation
    UEAElement sum;
    BigInt count = 0;
    do {
        add_scaled(sum, normalize_cached(w, Straightening::LeftmostFirst), Rational(1));
        ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    UEAElement result = uea_scaled(sum, Rational(BigInt(1), count));
    return sigma_cache_.emplace(m, std::move(result)).first->second;
}

UEAElement UniversalEnveloping::symmetrize(const SymElement& s) const {
    UEAElement out;
    for (const auto& [m, c] : s)
        add_scaled(out, symmetrize(m), c);
    return out;
}

SymElement UniversalEnveloping::desymmetrize(const UEAElement& u) const {
    // sigma(m) = m + lower degree, so peeling the top PBW monomial of the
    // remainder terminates and inverts sigma exactly.
    SymElement out;
    UEAElement rem = u;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        PBWMonomial m = top->first;
        Rational c = top->second;
        add_term(out, m, c);
        add_scaled(rem, symmetrize(m), -c);
    }
    return out;
}

SparseVec UniversalEnveloping::primitive_part(const UEAElement& u) const {
    SparseVec out;
    for (const auto& [m, c] : desymmetrize(u))
        if (m.degree() == 1)
            for (std::size_t i = 0; i < m.width(); ++i)
                if (m.exponent(i) == 1)
                    axpy(out, c, unit_vec(i));
    return out;
}

UEAElement UniversalEnveloping::from_vector(const SparseVec& x) const {
    UEAElement out;
    for (const auto& [i, c] : x)
        add_term(out, PBWMonomial::generator(width(), i), c);
    return out;
}

UEAElement UniversalEnveloping::one() const {
    return UEAElement{{PBWMonomial(width()), Rational(1)}};
}

} // namespace coquecigrue
