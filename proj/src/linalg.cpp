#include "semiflag/linalg.hpp"

#include <stdexcept>

namespace semiflag {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

ZMatrix clear_denominators(const RatMatrix& m) {
    ZMatrix z(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        mpz_class lcm = 1;
        for (const Rat& q : m[i])
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        z[i].reserve(m[i].size());
        for (const Rat& q : m[i])
            z[i].push_back(q.get_num() * (lcm / q.get_den()));
    }
    return z;
}

} // namespace

void RowEchelon::add_row(std::vector<Rat> v) {
    for (const auto& [pivot, row] : echelon_) {
        if (v[pivot] == 0)
            continue;
        Rat f = v[pivot];
        for (std::size_t j = pivot; j < cols_; ++j)
            v[j] -= f * row[j];
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j] == 0)
            continue;
        Rat inv = 1 / v[j];
        for (std::size_t k = j; k < cols_; ++k)
            v[k] *= inv;
        echelon_.emplace(j, std::move(v));
        return;
    }
}

int exact_rank(RatMatrix m) {
    if (m.empty())
        return 0;
    ZMatrix a = clear_denominators(m);
    std::size_t rows = a.size(), cols = a[0].size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

Rat exact_det(RatMatrix m) {
    std::size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0)
            ++pivot;
        if (pivot == n)
            return Rat(0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = 1 / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0)
                continue;
            Rat f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::vector<Rat> solve_square(RatMatrix a, std::vector<Rat> b) {
    std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_square: size mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0)
            ++pivot;
        if (pivot == n)
            throw std::logic_error("solve_square: singular matrix");
        std::swap(a[pivot], a[c]);
        std::swap(b[pivot], b[c]);
        Rat inv = 1 / a[c][c];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rat f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j)
                a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

RatMatrix invert(RatMatrix a) {
    std::size_t n = a.size();
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0)
            ++pivot;
        if (pivot == n)
            throw std::logic_error("invert: singular matrix");
        std::swap(a[pivot], a[c]);
        std::swap(inv[pivot], inv[c]);
        Rat d = 1 / a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= d;
            inv[c][j] *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace semiflag
