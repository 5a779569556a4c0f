#include "coquecigrue/linalg.hpp"

#include "coquecigrue/errors.hpp"

#include <algorithm>

namespace coquecigrue {

SparseVec unit_vec(std::size_t i) {
    return SparseVec{{i, Rational(1)}};
}

bool is_zero(const SparseVec& v) {
    return v.empty();
}

void axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
    if (c == 0)
        return;
    for (const auto& [idx, val] : src) {
        auto it = dst.find(idx);
        if (it == dst.end()) {
            dst.emplace(idx, c * val);
        } else {
            it->second += c * val;
            if (it->second == 0)
                dst.erase(it);
        }
    }
}

SparseVec scaled(const SparseVec& v, const Rational& c) {
    SparseVec r;
    axpy(r, c, v);
    return r;
}

SparseVec vec_sum(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    axpy(r, Rational(1), b);
    return r;
}

SparseVec vec_diff(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    axpy(r, Rational(-1), b);
    return r;
}

std::vector<Rational> to_dense(const SparseVec& v, std::size_t dim) {
    std::vector<Rational> r(dim, Rational(0));
    for (const auto& [idx, val] : v) {
        if (idx >= dim)
            throw InternalError("sparse index out of range in to_dense");
        r[idx] = val;
    }
    return r;
}

SparseVec to_sparse(const std::vector<Rational>& v) {
    SparseVec r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            r.emplace(i, v[i]);
    return r;
}

std::string vec_to_string(const SparseVec& v, std::span<const std::string> labels) {
    if (v.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, val] : v) {
        Rational a = val;
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
        if (a != 1)
            out += rational_to_string(a) + "*";
        out += idx < labels.size() ? labels[idx] : "#" + std::to_string(idx);
    }
    return out;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Rational& QMatrix::at(std::size_t r, std::size_t c) {
    return data_.at(r * cols_ + c);
}

const Rational& QMatrix::at(std::size_t r, std::size_t c) const {
    return data_.at(r * cols_ + c);
}

QMatrix QMatrix::mul(const QMatrix& other) const {
    if (cols_ != other.rows_)
        throw InternalError("matrix shape mismatch in mul");
    QMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

SparseVec QMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [j, val] : v) {
        if (j >= cols_)
            throw InternalError("vector index out of range in apply");
        for (std::size_t i = 0; i < rows_; ++i)
            if (at(i, j) != 0)
                axpy(out, val * at(i, j), unit_vec(i));
    }
    return out;
}

SparseVec QMatrix::column(std::size_t c) const {
    SparseVec out;
    for (std::size_t i = 0; i < rows_; ++i)
        if (at(i, c) != 0)
            out.emplace(i, at(i, c));
    return out;
}

RowSpace::RowSpace(std::size_t ncols) : ncols_(ncols) {}

std::vector<Rational> RowSpace::reduce(std::vector<Rational> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c == 0)
            continue;
        Rational f = c;
        for (std::size_t j = 0; j < ncols_; ++j)
            v[j] -= f * rows_[r][j];
    }
    return v;
}

bool RowSpace::contains(const std::vector<Rational>& v) const {
    auto rem = reduce(v);
    return std::all_of(rem.begin(), rem.end(), [](const Rational& x) { return x == 0; });
}

bool RowSpace::insert(std::vector<Rational> v) {
    if (v.size() != ncols_)
        throw InternalError("row length mismatch in RowSpace::insert");
    v = reduce(std::move(v));
    std::size_t pivot = ncols_;
    for (std::size_t j = 0; j < ncols_; ++j)
        if (v[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == ncols_)
        return false;
    Rational lead = v[pivot];
    for (auto& x : v)
        x /= lead;
    // clear the new pivot column in the old rows, then keep pivots sorted
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational f = rows_[r][pivot];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < ncols_; ++j)
            rows_[r][j] -= f * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

} // namespace coquecigrue
