#pragma once

#include <array>
#include <cstdlib>
#include <string>

#include "tqf/arith.hpp"

namespace tqf {

using Vec3 = std::array<i64, 3>;

inline Vec3 operator+(const Vec3& u, const Vec3& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }
inline Vec3 operator-(const Vec3& u, const Vec3& v) { return {u[0] - v[0], u[1] - v[1], u[2] - v[2]}; }
inline Vec3 operator*(i64 k, const Vec3& v) { return {k * v[0], k * v[1], k * v[2]}; }
inline Vec3 operator-(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }

// 3x3 integer matrix, row-major
struct Mat3 {
    std::array<std::array<i64, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 u;
        for (int i = 0; i < 3; ++i) u.m[i][i] = 1;
        return u;
    }
    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        Mat3 u;
        for (int i = 0; i < 3; ++i) {
            u.m[i][0] = c0[i];
            u.m[i][1] = c1[i];
            u.m[i][2] = c2[i];
        }
        return u;
    }
    Vec3 column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 c;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                i64 acc = 0;
                for (int k = 0; k < 3; ++k) acc = addck(acc, mulck(a.m[i][k], b.m[k][j]));
                c.m[i][j] = acc;
            }
        return c;
    }
    friend Vec3 operator*(const Mat3& a, const Vec3& v) {
        Vec3 w;
        for (int i = 0; i < 3; ++i) {
            i64 acc = 0;
            for (int k = 0; k < 3; ++k) acc = addck(acc, mulck(a.m[i][k], v[k]));
            w[i] = acc;
        }
        return w;
    }
    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }

    Mat3 transpose() const {
        Mat3 t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
        return t;
    }

    i64 det() const {
        i128 d = i128(m[0][0]) * (i128(m[1][1]) * m[2][2] - i128(m[1][2]) * m[2][1]) -
                 i128(m[0][1]) * (i128(m[1][0]) * m[2][2] - i128(m[1][2]) * m[2][0]) +
                 i128(m[0][2]) * (i128(m[1][0]) * m[2][1] - i128(m[1][1]) * m[2][0]);
        return to_i64(d);
    }

    // classical adjugate: M * adj(M) = det(M) * I
    Mat3 adjugate() const {
        Mat3 a;
        a.m[0][0] = to_i64(i128(m[1][1]) * m[2][2] - i128(m[1][2]) * m[2][1]);
        a.m[0][1] = to_i64(i128(m[0][2]) * m[2][1] - i128(m[0][1]) * m[2][2]);
        a.m[0][2] = to_i64(i128(m[0][1]) * m[1][2] - i128(m[0][2]) * m[1][1]);
        a.m[1][0] = to_i64(i128(m[1][2]) * m[2][0] - i128(m[1][0]) * m[2][2]);
        a.m[1][1] = to_i64(i128(m[0][0]) * m[2][2] - i128(m[0][2]) * m[2][0]);
        a.m[1][2] = to_i64(i128(m[0][2]) * m[1][0] - i128(m[0][0]) * m[1][2]);
        a.m[2][0] = to_i64(i128(m[1][0]) * m[2][1] - i128(m[1][1]) * m[2][0]);
        a.m[2][1] = to_i64(i128(m[0][1]) * m[2][0] - i128(m[0][0]) * m[2][1]);
        a.m[2][2] = to_i64(i128(m[0][0]) * m[1][1] - i128(m[0][1]) * m[1][0]);
        return a;
    }

    bool is_unimodular() const {
        i64 d = det();
        return d == 1 || d == -1;
    }

    // inverse of a unimodular matrix (throws otherwise)
    Mat3 inverse_unimodular() const {
        i64 d = det();
        if (d != 1 && d != -1) throw std::domain_error("matrix is not unimodular");
        Mat3 a = adjugate();
        if (d == -1)
            for (auto& row : a.m)
                for (auto& x : row) x = -x;
        return a;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < 3; ++i) {
            s += "[";
            for (int j = 0; j < 3; ++j) s += std::to_string(m[i][j]) + (j < 2 ? "," : "");
            s += (i < 2 ? "]," : "]");
        }
        return s + "]";
    }
};

}  // namespace tqf
