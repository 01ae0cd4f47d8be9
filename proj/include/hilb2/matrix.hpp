#pragma once

#include <vector>

#include "hilb2/tpoly.hpp"

namespace hilb2 {

namespace detail {
inline bool entry_is_zero(const Rational& x) { return x == 0; }
inline bool entry_is_zero(const TPoly& p) { return p.is_zero(); }
inline Rational entry_divexact(const Rational& a, const Rational& b) { return a / b; }
inline TPoly entry_divexact(const TPoly& a, const TPoly& b) { return a.divexact(b); }
inline long entry_size(const Rational&) { return 0; }
inline long entry_size(const TPoly& p) { return p.degree(); }
} // namespace detail

/// Rank by fraction-free Bareiss elimination; works over the rationals
/// and over Q[t] (where it computes the rank over the fraction field
/// Q(t), i.e. the generic rank).  All divisions are exact.
template <class T>
size_t bareiss_rank(std::vector<std::vector<T>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    T prev = T(Rational(1));
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r) {
            if (detail::entry_is_zero(m[r][col])) continue;
            if (piv == rows || detail::entry_size(m[r][col]) < detail::entry_size(m[piv][col]))
                piv = r;
        }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (detail::entry_is_zero(m[r][col])) {
                for (size_t c = col + 1; c < cols; ++c)
                    if (!detail::entry_is_zero(m[r][c]))
                        m[r][c] = detail::entry_divexact(m[rank][col] * m[r][c], prev);
                continue;
            }
            for (size_t c = col + 1; c < cols; ++c)
                m[r][c] = detail::entry_divexact(
                    m[rank][col] * m[r][c] - m[r][col] * m[rank][c], prev);
            m[r][col] = T(Rational(0));
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace hilb2
