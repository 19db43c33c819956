#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tqf {

using i64 = std::int64_t;
using i128 = __int128;

// Overflow-checked arithmetic. All desk-scale quantities here fit i64 with
// room to spare (discriminants up to ~10^6, coefficients up to ~10^9); these
// guards turn a silent wraparound into a hard error.
inline i64 addck(i64 x, i64 y) {
    i64 out;
    if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("integer overflow in addition");
    return out;
}

inline i64 mulck(i64 x, i64 y) {
    i64 out;
    if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("integer overflow in multiplication");
    return out;
}

inline i64 to_i64(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw std::overflow_error("value exceeds 64-bit range");
    return static_cast<i64>(v);
}

inline i64 gcd_i64(i64 x, i64 y) { return std::gcd(x, y); }

// floor and ceiling division for possibly negative numerators
inline i64 floor_div(i64 p, i64 q) {
    i64 d = p / q, r = p % q;
    return (r != 0 && ((r < 0) != (q < 0))) ? d - 1 : d;
}
inline i64 ceil_div(i64 p, i64 q) {
    i64 d = p / q, r = p % q;
    return (r != 0 && ((r < 0) == (q < 0))) ? d + 1 : d;
}
inline i128 floor_div(i128 p, i128 q) {
    i128 d = p / q, r = p % q;
    return (r != 0 && ((r < 0) != (q < 0))) ? d - 1 : d;
}
inline i128 ceil_div(i128 p, i128 q) {
    i128 d = p / q, r = p % q;
    return (r != 0 && ((r < 0) == (q < 0))) ? d + 1 : d;
}

// exact integer square root, floor(sqrt(n)); n >= 0
inline i64 isqrt(i64 n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    if (n == 0) return 0;
    i64 x = static_cast<i64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (x > 0 && x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

inline i128 isqrt(i128 n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    if (n == 0) return 0;
    i128 x = static_cast<i128>(__builtin_sqrtl(static_cast<long double>(n)));
    while (x > 0 && x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

inline bool is_square(i64 n) {
    if (n < 0) return false;
    i64 q = isqrt(n);
    return q * q == n;
}

inline int valuation(i64 n, i64 p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d : {i64(2), i64(3), i64(5)}) {
        if (n % d == 0) return n == d;
    }
    for (i64 d = 7; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 4) == 0) return false;
    }
    return true;
}

// prime factorization by trial division; adequate for the desk scale here
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n <= 0) throw std::domain_error("factorize expects a positive integer");
    std::vector<std::pair<i64, int>> out;
    for (i64 p : {i64(2), i64(3), i64(5)}) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    for (i64 d = 7; d * d <= n; d += 6) {
        for (i64 p : {d, d + 4}) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            if (e) out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

inline bool is_squarefree(i64 n) {
    if (n <= 0) return false;
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (auto& [p, e] : factorize(n)) {
        size_t m = out.size();
        i64 q = 1;
        for (int i = 0; i < e; ++i) {
            q *= p;
            for (size_t j = 0; j < m; ++j) out.push_back(out[j] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int moebius(i64 n) {
    int k = 0;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        ++k;
    }
    return (k % 2 == 0) ? 1 : -1;
}

inline int num_prime_factors(i64 n) { return n == 1 ? 0 : int(factorize(n).size()); }

// Kronecker symbol (a|n), extended Jacobi symbol for all integers.
// (a|2) is 1 for a = +-1 mod 8, -1 for a = +-3 mod 8, 0 for even a.
inline int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    int k = 1;
    if (v % 2 == 1) {
        i64 am8 = ((a % 8) + 8) % 8;
        if (am8 == 3 || am8 == 5) k = -1;
        else if (am8 != 1 && am8 != 7) return 0;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) { a /= 2; ++v; }
        if (v % 2 == 1 && (n % 8 == 3 || n % 8 == 5)) k = -k;
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        i64 tmp = n % a;
        n = a;
        a = tmp;
    }
    return (n == 1) ? k : 0;
}

}  // namespace tqf
