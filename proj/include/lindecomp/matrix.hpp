#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lindecomp/field.hpp"

namespace lindecomp {

class VectorF;

// Dense matrix over GF(p), row-major, exact arithmetic. Values are immutable
// in spirit: every operation returns a new matrix. The flattening convention
// used throughout the project (spans, serialization) is row-major.
class MatrixF {
public:
    MatrixF() = default;
    MatrixF(Fe modulus, std::size_t rows, std::size_t cols);

    static MatrixF identity(Fe modulus, std::size_t n);
    // Entries may be any signed integers; they are reduced mod p.
    static MatrixF from_rows(Fe modulus,
                             std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static MatrixF from_flat(Fe modulus, std::size_t rows, std::size_t cols,
                             const std::vector<std::int64_t>& flat);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Fe modulus() const noexcept { return p_; }
    bool empty() const noexcept { return entries_.empty(); }

    Fe at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Fe& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    const std::vector<Fe>& flat() const noexcept { return entries_; }

    MatrixF operator*(const MatrixF& rhs) const;
    MatrixF operator+(const MatrixF& rhs) const;
    MatrixF operator-(const MatrixF& rhs) const;
    MatrixF scaled(Fe c) const;

    // Gauss-Jordan inverse; throws SingularMatrix when rank < n.
    MatrixF inverse() const;

    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_identity() const noexcept;
    bool is_zero() const noexcept;

    bool operator==(const MatrixF& rhs) const noexcept = default;

    std::string to_string() const;

private:
    Fe p_ = 0;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Fe> entries_;
};

// Row vector over GF(p). Messages in the vector-based protocol and orbit
// spans live here; v * M is the only product it supports.
class VectorF {
public:
    VectorF() = default;
    VectorF(Fe modulus, std::size_t length);
    static VectorF from_ints(Fe modulus, const std::vector<std::int64_t>& values);
    static VectorF unit(Fe modulus, std::size_t length, std::size_t index);

    std::size_t size() const noexcept { return entries_.size(); }
    Fe modulus() const noexcept { return p_; }
    bool empty() const noexcept { return entries_.empty(); }

    Fe at(std::size_t i) const { return entries_[i]; }
    Fe& at(std::size_t i) { return entries_[i]; }

    const std::vector<Fe>& flat() const noexcept { return entries_; }

    VectorF operator*(const MatrixF& m) const;
    VectorF operator+(const VectorF& rhs) const;
    VectorF operator-(const VectorF& rhs) const;
    VectorF scaled(Fe c) const;

    bool is_zero() const noexcept;

    bool operator==(const VectorF& rhs) const noexcept = default;

    std::string to_string() const;

private:
    Fe p_ = 0;
    std::vector<Fe> entries_;
};

} // namespace lindecomp
