#pragma once

#include "coquecigrue/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace coquecigrue {

// Sparse column vector. Invariant everywhere: no explicit zero entries,
// so operator== is exact linear-algebra equality.
using SparseVec = std::map<std::size_t, Rational>;

SparseVec unit_vec(std::size_t i);
bool is_zero(const SparseVec& v);

// dst += c * src
void axpy(SparseVec& dst, const Rational& c, const SparseVec& src);
SparseVec scaled(const SparseVec& v, const Rational& c);
SparseVec vec_sum(const SparseVec& a, const SparseVec& b);
SparseVec vec_diff(const SparseVec& a, const SparseVec& b);

std::vector<Rational> to_dense(const SparseVec& v, std::size_t dim);
SparseVec to_sparse(const std::vector<Rational>& v);

// Renders "a - 2*b + 1/2*c" with the given coordinate labels, "0" if empty.
std::string vec_to_string(const SparseVec& v, std::span<const std::string> labels);

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c);
    const Rational& at(std::size_t r, std::size_t c) const;

    QMatrix mul(const QMatrix& other) const;
    SparseVec apply(const SparseVec& v) const;
    SparseVec column(std::size_t c) const;
    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// A subspace of Q^n kept as a reduced row echelon basis with ascending
// pivot columns. insert() keeps the invariant and reports rank growth.
class RowSpace {
public:
    explicit RowSpace(std::size_t ncols);

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool insert(std::vector<Rational> v);
    std::vector<Rational> reduce(std::vector<Rational> v) const;
    bool contains(const std::vector<Rational>& v) const;

private:
    std::size_t ncols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace coquecigrue
