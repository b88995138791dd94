#pragma once

#include "hstab/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hstab {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

inline Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct RowEchelon {
    std::vector<std::size_t> pivots;  // pivot column of each row
    Matrix rows;                      // reduced rows, pivot entry 1, zero in other pivot columns
};

/// Reduced row echelon form where columns are eliminated in `column_priority` order
/// (the first listed column is the most significant). Zero rows are dropped.
inline RowEchelon reduced_row_echelon(Matrix rows, const std::vector<std::size_t>& column_priority) {
    RowEchelon out;
    std::size_t next = 0;
    for (std::size_t col : column_priority) {
        std::optional<std::size_t> piv;
        for (std::size_t r = next; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (!piv) continue;
        std::swap(rows[next], rows[*piv]);
        Rational inv = 1 / rows[next][col];
        for (auto& x : rows[next]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                if (rows[next][c] != 0) rows[r][c] -= f * rows[next][c];
        }
        out.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

inline std::size_t rank(const Matrix& rows) {
    if (rows.empty()) return 0;
    std::vector<std::size_t> cols(rows.front().size());
    for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
    return reduced_row_echelon(rows, cols).pivots.size();
}

/// Solves A x = b for square nonsingular A; nullopt when singular.
inline std::optional<Vector> solve(Matrix a, Vector b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> cols(n);
    for (std::size_t c = 0; c < n; ++c) cols[c] = c;
    auto ech = reduced_row_echelon(std::move(a), cols);
    if (ech.pivots.size() < n) return std::nullopt;
    Vector x(n);
    for (std::size_t r = 0; r < n; ++r) x[ech.pivots[r]] = ech.rows[r][n];
    return x;
}

}  // namespace hstab
