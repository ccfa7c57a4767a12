#include "lindecomp/matrix.hpp"

#include <sstream>

namespace lindecomp {

namespace {

void check_same_modulus(Fe a, Fe b) {
    if (a != b)
        throw DimensionMismatch("operands live over different moduli: " + std::to_string(a) +
                                " vs " + std::to_string(b));
}

} // namespace

MatrixF::MatrixF(Fe modulus, std::size_t rows, std::size_t cols)
    : p_(modulus), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

MatrixF MatrixF::identity(Fe modulus, std::size_t n) {
    MatrixF m(modulus, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1 % modulus;
    return m;
}

MatrixF MatrixF::from_rows(Fe modulus,
                           std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    PrimeField f(modulus);
    MatrixF m(modulus, rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols_)
            throw DimensionMismatch("ragged rows in matrix literal");
        std::size_t c = 0;
        for (std::int64_t v : row)
            m.at(r, c++) = f.reduce(v);
        ++r;
    }
    return m;
}

MatrixF MatrixF::from_flat(Fe modulus, std::size_t rows, std::size_t cols,
                           const std::vector<std::int64_t>& flat) {
    if (flat.size() != rows * cols)
        throw DimensionMismatch("flat entry count does not match rows*cols");
    PrimeField f(modulus);
    MatrixF m(modulus, rows, cols);
    for (std::size_t i = 0; i < flat.size(); ++i)
        m.entries_[i] = f.reduce(flat[i]);
    return m;
}

MatrixF MatrixF::operator*(const MatrixF& rhs) const {
    check_same_modulus(p_, rhs.p_);
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("matrix product shape mismatch: " + std::to_string(cols_) +
                                " vs " + std::to_string(rhs.rows_));
    MatrixF out(p_, rows_, rhs.cols_);
    const std::uint64_t p = p_;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                std::uint64_t acc = out.at(i, j) + a * rhs.at(k, j) % p;
                out.at(i, j) = static_cast<Fe>(acc >= p ? acc - p : acc);
            }
        }
    }
    return out;
}

MatrixF MatrixF::operator+(const MatrixF& rhs) const {
    check_same_modulus(p_, rhs.p_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    MatrixF out(p_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        Fe s = entries_[i] + rhs.entries_[i];
        out.entries_[i] = s >= p_ ? s - p_ : s;
    }
    return out;
}

MatrixF MatrixF::operator-(const MatrixF& rhs) const {
    check_same_modulus(p_, rhs.p_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    MatrixF out(p_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] >= rhs.entries_[i] ? entries_[i] - rhs.entries_[i]
                                                         : entries_[i] + p_ - rhs.entries_[i];
    return out;
}

MatrixF MatrixF::scaled(Fe c) const {
    MatrixF out(p_, rows_, cols_);
    const std::uint64_t p = p_;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = static_cast<Fe>(static_cast<std::uint64_t>(c) * entries_[i] % p);
    return out;
}

MatrixF MatrixF::inverse() const {
    if (!is_square())
        throw DimensionMismatch("inverse of a non-square matrix");
    PrimeField f(p_);
    const std::size_t n = rows_;
    MatrixF a(*this);
    MatrixF inv = identity(p_, n);
    for (std::size_t col = 0; col < n; ++col) {
        // first nonzero entry at or below the diagonal becomes the pivot
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw SingularMatrix("matrix is singular (rank < " + std::to_string(n) + ")");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const Fe scale = f.inv(a.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = f.mul(a.at(col, j), scale);
            inv.at(col, j) = f.mul(inv.at(col, j), scale);
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a.at(row, col) == 0)
                continue;
            const Fe factor = a.at(row, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(row, j) = f.sub(a.at(row, j), f.mul(factor, a.at(col, j)));
                inv.at(row, j) = f.sub(inv.at(row, j), f.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

bool MatrixF::is_identity() const noexcept {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u % p_ : 0u))
                return false;
    return true;
}

bool MatrixF::is_zero() const noexcept {
    for (Fe v : entries_)
        if (v != 0)
            return false;
    return true;
}

std::string MatrixF::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

VectorF::VectorF(Fe modulus, std::size_t length) : p_(modulus), entries_(length, 0) {}

VectorF VectorF::from_ints(Fe modulus, const std::vector<std::int64_t>& values) {
    PrimeField f(modulus);
    VectorF v(modulus, values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        v.entries_[i] = f.reduce(values[i]);
    return v;
}

VectorF VectorF::unit(Fe modulus, std::size_t length, std::size_t index) {
    VectorF v(modulus, length);
    v.entries_.at(index) = 1 % modulus;
    return v;
}

VectorF VectorF::operator*(const MatrixF& m) const {
    check_same_modulus(p_, m.modulus());
    if (size() != m.rows())
        throw DimensionMismatch("vector-matrix product shape mismatch");
    VectorF out(p_, m.cols());
    const std::uint64_t p = p_;
    for (std::size_t k = 0; k < size(); ++k) {
        const std::uint64_t a = entries_[k];
        if (a == 0)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::uint64_t acc = out.entries_[j] + a * m.at(k, j) % p;
            out.entries_[j] = static_cast<Fe>(acc >= p ? acc - p : acc);
        }
    }
    return out;
}

VectorF VectorF::operator+(const VectorF& rhs) const {
    check_same_modulus(p_, rhs.p_);
    if (size() != rhs.size())
        throw DimensionMismatch("vector sum length mismatch");
    VectorF out(p_, size());
    for (std::size_t i = 0; i < size(); ++i) {
        Fe s = entries_[i] + rhs.entries_[i];
        out.entries_[i] = s >= p_ ? s - p_ : s;
    }
    return out;
}

VectorF VectorF::operator-(const VectorF& rhs) const {
    check_same_modulus(p_, rhs.p_);
    if (size() != rhs.size())
        throw DimensionMismatch("vector difference length mismatch");
    VectorF out(p_, size());
    for (std::size_t i = 0; i < size(); ++i)
        out.entries_[i] = entries_[i] >= rhs.entries_[i] ? entries_[i] - rhs.entries_[i]
                                                          : entries_[i] + p_ - rhs.entries_[i];
    return out;
}

VectorF VectorF::scaled(Fe c) const {
    VectorF out(p_, size());
    const std::uint64_t p = p_;
    for (std::size_t i = 0; i < size(); ++i)
        out.entries_[i] = static_cast<Fe>(static_cast<std::uint64_t>(c) * entries_[i] % p);
    return out;
}

bool VectorF::is_zero() const noexcept {
    for (Fe v : entries_)
        if (v != 0)
            return false;
    return true;
}

std::string VectorF::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < entries_.size(); ++i)
        os << (i ? "," : "") << entries_[i];
    os << "]";
    return os.str();
}

} // namespace lindecomp
