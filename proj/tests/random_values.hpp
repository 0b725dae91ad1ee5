#pragma once

#include <random>

#include "refl/matrix.hpp"

namespace refl::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
    return Rational(num(rng), den(rng));
}

/// Random element with about half of its coefficients zero.
inline CycloNum random_cyclo(std::mt19937_64& rng, const CycloField& f, int range = 9) {
    CycloNum::Coeffs c(f.degree());
    std::bernoulli_distribution keep(0.6);
    for (auto& x : c)
        if (keep(rng)) x = random_rational(rng, range);
    return CycloNum(f, std::move(c));
}

/// Small integer combination of powers of zeta_L.
inline CycloNum random_small(std::mt19937_64& rng, const CycloField& f, int range = 2) {
    std::uniform_int_distribution<int> coef(-range, range);
    std::uniform_int_distribution<int> exp(0, f.conductor() - 1);
    CycloNum x(f);
    int terms = 1 + static_cast<int>(rng() % 2);
    for (int t = 0; t < terms; ++t) x += CycloNum::zeta_in(f.conductor(), f.conductor(), exp(rng)) * Rational(coef(rng));
    return x;
}

/// rows x cols matrix of rank at most `rank`, built as a product of random factors.
inline Matrix random_low_rank(std::mt19937_64& rng, const CycloField& f, std::size_t rows, std::size_t cols,
                              std::size_t rank) {
    Matrix a(f, rows, rank), b(f, rank, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rank; ++j) a(i, j) = random_cyclo(rng, f, 3);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = random_cyclo(rng, f, 3);
    if (rank == 0) return Matrix(f, rows, cols);
    return a * b;
}

/// A different spanning set of the row space of m: random combinations plus the originals scaled.
inline Matrix recombine(std::mt19937_64& rng, const Matrix& m) {
    const CycloField& f = m.field();
    Matrix out(f, 0, m.cols());
    for (std::size_t k = 0; k < m.rows() + 1; ++k) {
        Vector row(m.cols(), CycloNum(f));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            CycloNum c = random_cyclo(rng, f, 3);
            for (std::size_t j = 0; j < m.cols(); ++j) row[j] += c * m(i, j);
        }
        out.append_row(row);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vector row = m.row_vector(i);
        CycloNum c = random_cyclo(rng, f, 3);
        if (c.is_zero()) c = CycloNum(f, Rational(2));
        for (auto& x : row) x = x * c;
        out.append_row(row);
    }
    return out;
}

}  // namespace refl::testing
