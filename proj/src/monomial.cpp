#include "coquecigrue/monomial.hpp"

#include "coquecigrue/errors.hpp"

#include <algorithm>

namespace coquecigrue {

PBWMonomial PBWMonomial::generator(std::size_t width, std::size_t i) {
    PBWMonomial m(width);
    m.bump(i);
    return m;
}

PBWMonomial PBWMonomial::from_word(std::size_t width, const Word& w) {
    PBWMonomial m(width);
    for (std::size_t letter : w)
        m.bump(letter);
    return m;
}

void PBWMonomial::bump(std::size_t i, unsigned by) {
    exp_.at(i) += by;
    degree_ += by;
}

PBWMonomial PBWMonomial::operator*(const PBWMonomial& other) const {
    if (width() != other.width())
        throw InternalError("monomial width mismatch");
    PBWMonomial m = *this;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        m.exp_[i] += other.exp_[i];
    m.degree_ += other.degree_;
    return m;
}

PBWMonomial PBWMonomial::operator/(const PBWMonomial& other) const {
    if (!other.divides(*this))
        throw InternalError("monomial division is not exact");
    PBWMonomial m = *this;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        m.exp_[i] -= other.exp_[i];
    m.degree_ -= other.degree_;
    return m;
}

bool PBWMonomial::divides(const PBWMonomial& other) const {
    if (width() != other.width())
        return false;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i])
            return false;
    return true;
}

Word PBWMonomial::word() const {
    Word w;
    w.reserve(degree_);
    for (std::size_t i = 0; i < exp_.size(); ++i)
        for (unsigned k = 0; k < exp_[i]; ++k)
            w.push_back(i);
    return w;
}

std::strong_ordering PBWMonomial::operator<=>(const PBWMonomial& other) const {
    if (auto c = degree_ <=> other.degree_; c != 0)
        return c;
    return exp_ <=> other.exp_;
}

std::string PBWMonomial::to_string(std::span<const std::string> labels) const {
    if (degree_ == 0)
        return "1";
    std::string out;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (exp_[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += i < labels.size() ? labels[i] : "#" + std::to_string(i);
        if (exp_[i] > 1)
            out += "^" + std::to_string(exp_[i]);
    }
    return out;
}

namespace {

void fill_of_degree(std::size_t width, unsigned deg, std::size_t from, PBWMonomial& acc,
                    std::vector<PBWMonomial>& out) {
    if (deg == 0) {
        out.push_back(acc);
        return;
    }
    if (from >= width)
        return;
    for (unsigned e = 0; e <= deg; ++e) {
        PBWMonomial next = acc;
        if (e > 0)
            next.bump(from, e);
        fill_of_degree(width, deg - e, from + 1, next, out);
    }
}

} // namespace

std::vector<PBWMonomial> monomials_of_degree(std::size_t width, unsigned deg) {
    std::vector<PBWMonomial> out;
    if (deg == 0) {
        out.emplace_back(width);
        return out;
    }
    if (width == 0)
        return out;
    PBWMonomial acc(width);
    fill_of_degree(width, deg, 0, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PBWMonomial> monomials_up_to(std::size_t width, unsigned maxdeg) {
    std::vector<PBWMonomial> out;
    for (unsigned d = 0; d <= maxdeg; ++d) {
        auto layer = monomials_of_degree(width, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

BigInt monomial_factorial(const PBWMonomial& m) {
    BigInt r = 1;
    for (std::size_t i = 0; i < m.width(); ++i)
        r *= factorial(m.exponent(i));
    return r;
}

Rational monomial_binomial(const PBWMonomial& a, const PBWMonomial& b) {
    if (!b.divides(a))
        return Rational(0);
    BigInt r = 1;
    for (std::size_t i = 0; i < a.width(); ++i)
        r *= binomial(a.exponent(i), b.exponent(i));
    return Rational(r);
}

} // namespace coquecigrue
