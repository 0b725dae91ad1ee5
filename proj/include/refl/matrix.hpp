#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "refl/cyclo.hpp"

namespace refl {

using Vector = std::vector<CycloNum>;

/// Dense row-major matrix over a single cyclotomic field.
class Matrix {
public:
    Matrix() : Matrix(CycloField::get(1), 0, 0) {}
    Matrix(const CycloField& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const CycloField& field, std::size_t n);
    /// Builds a matrix from rows; all entries must share one conductor.
    static Matrix from_rows(const CycloField& field, const std::vector<Vector>& rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const CycloField& field() const noexcept { return *field_; }
    [[nodiscard]] int conductor() const noexcept { return field_->conductor(); }

    CycloNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycloNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const CycloNum> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<CycloNum> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] Vector row_vector(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Matrix lifted(int L) const;
    [[nodiscard]] Vector apply(std::span<const CycloNum> v) const;
    [[nodiscard]] bool is_zero() const;

    void append_row(std::span<const CycloNum> r);
    void swap_rows(std::size_t a, std::size_t b);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Injective byte encoding of shape and entries.
    [[nodiscard]] std::string key() const;

private:
    const CycloField* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<CycloNum> data_;
};

struct RrefResult {
    std::size_t rank;
    Matrix canonical;  ///< the nonzero rows of the reduced row-echelon form
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination with the first nonzero entry (in column order) as pivot.
RrefResult rref(const Matrix& m);

Vector mat_vec(const Matrix& m, std::span<const CycloNum> v);
CycloNum dot(std::span<const CycloNum> a, std::span<const CycloNum> b);
Vector lift(std::span<const CycloNum> v, int L);
bool is_zero(std::span<const CycloNum> v);

/// Subspace of K^n with its canonical reduced row-echelon basis.
class Subspace {
public:
    /// Zero subspace of K^n.
    Subspace(const CycloField& field, std::size_t ambient);
    /// Row space of rows; any spanning set is accepted and canonicalized.
    static Subspace span(const Matrix& rows);
    static Subspace full(const CycloField& field, std::size_t ambient);

    [[nodiscard]] std::size_t ambient() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
    [[nodiscard]] bool is_zero() const noexcept { return basis_.rows() == 0; }
    [[nodiscard]] const Matrix& basis() const noexcept { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    [[nodiscard]] const CycloField& field() const noexcept { return basis_.field(); }

    [[nodiscard]] bool contains(std::span<const CycloNum> v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;
    /// Rows r with r . v = 0 for every v in the subspace (bilinear pairing).
    [[nodiscard]] Matrix annihilator() const;
    [[nodiscard]] const std::string& key() const noexcept { return key_; }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.key_ == b.key_; }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots);

    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
    std::string key_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

}  // namespace refl
