#include "refl/matrix.hpp"

#include <utility>

#include "refl/error.hpp"

namespace refl {

Matrix::Matrix(const CycloField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, CycloNum(field)) {}

Matrix Matrix::identity(const CycloField& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloNum(field, Rational(1));
    return m;
}

Matrix Matrix::from_rows(const CycloField& field, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(field, 0, cols);
    m.data_.reserve(rows.size() * cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::lifted(int L) const {
    const CycloField& f = CycloField::get(L);
    if (&f == field_) return *this;
    Matrix out(f, 0, cols_);
    out.rows_ = rows_;
    out.data_.clear();
    out.data_.reserve(data_.size());
    for (const auto& x : data_) out.data_.push_back(lift(x, L));
    return out;
}

Vector Matrix::apply(std::span<const CycloNum> v) const { return mat_vec(*this, v); }

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

void Matrix::append_row(std::span<const CycloNum> r) {
    if (r.size() != cols_) throw DimensionMismatch("append_row: wrong row length");
    for (const auto& x : r) {
        if (&x.field() != field_) throw ConductorMismatch(x.conductor(), conductor());
        data_.push_back(x);
    }
    ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    if (a.field_ != b.field_) throw ConductorMismatch(a.conductor(), b.conductor());
    Matrix r(*a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycloNum& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shapes differ");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (!(a.data_[i] == b.data_[i])) return false;
    return true;
}

std::string Matrix::key() const {
    std::string out;
    out.reserve(16 + data_.size() * 3 * static_cast<std::size_t>(field_->degree()));
    auto put = [&out](std::size_t v) {
        while (v >= 0x80) {
            out.push_back(static_cast<char>((v & 0x7f) | 0x80));
            v >>= 7;
        }
        out.push_back(static_cast<char>(v));
    };
    put(static_cast<std::size_t>(field_->conductor()));
    put(rows_);
    put(cols_);
    for (const auto& x : data_) x.append_key(out);
    return out;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        a.swap_rows(p, r);
        if (!a(r, c).is_one()) {
            CycloNum inv = a(r, c).inverse();
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(r, j) = a(r, j) * inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            CycloNum f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix canon(m.field(), 0, cols);
    for (std::size_t i = 0; i < r; ++i) canon.append_row(a.row(i));
    return {r, std::move(canon), std::move(pivots)};
}

Vector mat_vec(const Matrix& m, std::span<const CycloNum> v) {
    if (v.size() != m.cols()) throw DimensionMismatch("mat_vec: vector length differs from column count");
    Vector out(m.rows(), CycloNum(m.field()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

CycloNum dot(std::span<const CycloNum> a, std::span<const CycloNum> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: lengths differ");
    if (a.empty()) return CycloNum();
    CycloNum s(a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vector lift(std::span<const CycloNum> v, int L) {
    Vector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(lift(x, L));
    return out;
}

bool is_zero(std::span<const CycloNum> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Subspace::Subspace(const CycloField& field, std::size_t ambient) : Subspace(Matrix(field, 0, ambient), {}) {}

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : ambient_(basis.cols()), basis_(std::move(basis)), pivots_(std::move(pivots)), key_(basis_.key()) {}

Subspace Subspace::span(const Matrix& rows) {
    RrefResult r = rref(rows);
    return Subspace(std::move(r.canonical), std::move(r.pivots));
}

Subspace Subspace::full(const CycloField& field, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(Matrix::identity(field, ambient), std::move(piv));
}

bool Subspace::contains(std::span<const CycloNum> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::contains: ambient mismatch");
    Vector w(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        CycloNum f = w[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_(i, j).is_zero()) w[j] -= f * basis_(i, j);
    }
    return refl::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis().row(i))) return false;
    return true;
}

Matrix Subspace::annihilator() const { return kernel(basis_).basis(); }

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Matrix rows(m.field(), 0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n, CycloNum(m.field()));
        v[f] = CycloNum(m.field(), Rational(1));
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.canonical(i, f);
        rows.append_row(v);
    }
    return Subspace::span(rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("intersect: ambient dimensions differ");
    if (&a.field() != &b.field()) throw ConductorMismatch(a.field().conductor(), b.field().conductor());
    Matrix constraints = a.annihilator();
    Matrix cb = b.annihilator();
    for (std::size_t i = 0; i < cb.rows(); ++i) constraints.append_row(cb.row(i));
    return kernel(constraints);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("sum: ambient dimensions differ");
    if (&a.field() != &b.field()) throw ConductorMismatch(a.field().conductor(), b.field().conductor());
    Matrix rows = a.basis();
    for (std::size_t i = 0; i < b.dim(); ++i) rows.append_row(b.basis().row(i));
    return Subspace::span(rows);
}

}  // namespace refl
