#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ninepoint/quadext.hpp"
#include "ninepoint/rational.hpp"

namespace ninepoint {

template <class K>
struct Vec3 {
    std::array<K, 3> v{K(0), K(0), K(0)};

    Vec3() = default;
    Vec3(K a, K b, K c) : v{std::move(a), std::move(b), std::move(c)} {}

    const K& operator[](size_t i) const { return v[i]; }
    K& operator[](size_t i) { return v[i]; }

    bool is_zero() const {
        using ninepoint::is_zero;
        return is_zero(v[0]) && is_zero(v[1]) && is_zero(v[2]);
    }

    friend Vec3 operator+(const Vec3& a, const Vec3& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    }
    friend Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
    friend Vec3 operator*(const Vec3& a, const K& s) { return {a[0] * s, a[1] * s, a[2] * s}; }
    friend Vec3 operator*(const K& s, const Vec3& a) { return a * s; }
    friend bool operator==(const Vec3& a, const Vec3& b) { return a.v == b.v; }
};

template <class K>
K dot(const Vec3<K>& a, const Vec3<K>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class K>
Vec3<K> cross(const Vec3<K>& a, const Vec3<K>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// True when a and b span the same projective element.
template <class K>
bool proportional(const Vec3<K>& a, const Vec3<K>& b) {
    return cross(a, b).is_zero();
}

template <class K>
struct Mat3 {
    std::array<std::array<K, 3>, 3> m{};

    Mat3() {
        for (auto& row : m)
            for (auto& x : row) x = K(0);
    }
    static Mat3 identity() {
        Mat3 r;
        for (int i = 0; i < 3; ++i) r.m[i][i] = K(1);
        return r;
    }
    static Mat3 from_rows(const Vec3<K>& a, const Vec3<K>& b, const Vec3<K>& c) {
        Mat3 r;
        for (int j = 0; j < 3; ++j) {
            r.m[0][j] = a[j];
            r.m[1][j] = b[j];
            r.m[2][j] = c[j];
        }
        return r;
    }
    static Mat3 from_cols(const Vec3<K>& a, const Vec3<K>& b, const Vec3<K>& c) {
        return from_rows(a, b, c).transpose();
    }

    const K& operator()(int i, int j) const { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    K& operator()(int i, int j) { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    Vec3<K> row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
    Vec3<K> col(int j) const { return {m[0][j], m[1][j], m[2][j]}; }

    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[j][i] = m[i][j];
        return r;
    }

    bool is_zero() const {
        using ninepoint::is_zero;
        for (auto& row : m)
            for (auto& x : row)
                if (!is_zero(x)) return false;
        return true;
    }
    bool is_symmetric() const {
        return m[0][1] == m[1][0] && m[0][2] == m[2][0] && m[1][2] == m[2][1];
    }

    friend Mat3 operator+(const Mat3& a, const Mat3& b) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
        return r;
    }
    friend Mat3 operator-(const Mat3& a, const Mat3& b) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
        return r;
    }
    friend Mat3 operator*(const Mat3& a, const K& s) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] * s;
        return r;
    }
    friend Mat3 operator*(const K& s, const Mat3& a) { return a * s; }
    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                K s = K(0);
                for (int k = 0; k < 3; ++k) s = s + a.m[i][k] * b.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    friend Vec3<K> operator*(const Mat3& a, const Vec3<K>& x) {
        Vec3<K> r;
        for (int i = 0; i < 3; ++i) r[i] = a.m[i][0] * x[0] + a.m[i][1] * x[1] + a.m[i][2] * x[2];
        return r;
    }
    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }

    K det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    Mat3 adjugate() const {
        Mat3 r;
        r.m[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
        r.m[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
        r.m[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
        r.m[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
        r.m[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
        r.m[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
        r.m[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
        r.m[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
        r.m[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        return r;
    }

    int rank() const {
        if (!adjugate().is_zero()) {
            using ninepoint::is_zero;
            K d = det();
            return is_zero(d) ? 2 : 3;
        }
        return this->is_zero() ? 0 : 1;
    }
};

// Kernel vector of a rank-2 matrix: any nonzero column of the adjugate.
template <class K>
std::optional<Vec3<K>> kernel_vector(const Mat3<K>& a) {
    Mat3<K> adj = a.adjugate();
    for (int j = 0; j < 3; ++j) {
        Vec3<K> c = adj.col(j);
        if (!c.is_zero()) return c;
    }
    // rank <= 1: kernel is 2-dimensional; cross a nonzero row with unit axes
    for (int i = 0; i < 3; ++i) {
        Vec3<K> r = a.row(i);
        if (r.is_zero()) continue;
        for (int j = 0; j < 3; ++j) {
            Vec3<K> e;
            e[j] = K(1);
            Vec3<K> c = cross(r, e);
            if (!c.is_zero()) return c;
        }
    }
    return std::nullopt;  // zero matrix
}

// Solves a*x = b for invertible a via the adjugate (x scaled by det).
template <class K>
std::optional<Vec3<K>> solve3(const Mat3<K>& a, const Vec3<K>& b) {
    using ninepoint::is_zero;
    K d = a.det();
    if (is_zero(d)) return std::nullopt;
    Vec3<K> x = a.adjugate() * b;
    K inv = K(1) / d;
    return Vec3<K>{x[0] * inv, x[1] * inv, x[2] * inv};
}

// Reduced row echelon form over a field; returns the rank.
template <class K>
size_t rref(std::vector<std::vector<K>>& m) {
    using ninepoint::is_zero;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        K inv = K(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            K f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Basis of the right null space of m (rows x cols).
template <class K>
std::vector<std::vector<K>> nullspace(std::vector<std::vector<K>> m, size_t cols) {
    using ninepoint::is_zero;
    size_t rank = rref(m);
    std::vector<int> pivot_col_of_row(rank, -1);
    std::vector<bool> is_pivot(cols, false);
    for (size_t i = 0; i < rank; ++i) {
        for (size_t c = 0; c < cols; ++c)
            if (!is_zero(m[i][c])) {
                pivot_col_of_row[i] = static_cast<int>(c);
                is_pivot[c] = true;
                break;
            }
    }
    std::vector<std::vector<K>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<K> v(cols, K(0));
        v[free_c] = K(1);
        for (size_t i = 0; i < rank; ++i) {
            int pc = pivot_col_of_row[i];
            if (pc >= 0) v[static_cast<size_t>(pc)] = -m[i][free_c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ninepoint
