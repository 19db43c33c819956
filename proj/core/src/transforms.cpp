#include "tqf/transforms.hpp"

#include <algorithm>

namespace tqf {

namespace {

// diagonalize A by unimodular row/column operations, tracking only the column
// transform: returns (diag, V) with diag the diagonal of some U*A*V
struct DiagResult {
    std::array<i64, 3> d;
    Mat3 V;
};

DiagResult diagonalize_unimodular(Mat3 A) {
    Mat3 V = Mat3::identity();
    auto swap_rows = [&](int i, int j) { std::swap(A.m[i], A.m[j]); };
    auto swap_cols = [&](int i, int j) {
        for (int k = 0; k < 3; ++k) std::swap(A.m[k][i], A.m[k][j]);
        for (int k = 0; k < 3; ++k) std::swap(V.m[k][i], V.m[k][j]);
    };
    auto addrow = [&](int dst, int src, i64 q) {
        for (int k = 0; k < 3; ++k) A.m[dst][k] = addck(A.m[dst][k], mulck(q, A.m[src][k]));
    };
    auto addcol = [&](int dst, int src, i64 q) {
        for (int k = 0; k < 3; ++k) A.m[k][dst] = addck(A.m[k][dst], mulck(q, A.m[k][src]));
        for (int k = 0; k < 3; ++k) V.m[k][dst] = addck(V.m[k][dst], mulck(q, V.m[k][src]));
    };

    for (int k = 0; k < 3; ++k) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = k; i < 3; ++i)
                for (int j = k; j < 3; ++j)
                    if (A.m[i][j] != 0 &&
                        (pi < 0 || std::abs(A.m[i][j]) < std::abs(A.m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;  // submatrix all zero
            if (pi != k) swap_rows(k, pi);
            if (pj != k) swap_cols(k, pj);
            // truncated division leaves remainders strictly smaller than the pivot
            for (int i = k + 1; i < 3; ++i)
                if (A.m[i][k] != 0) addrow(i, k, -(A.m[i][k] / A.m[k][k]));
            for (int j = k + 1; j < 3; ++j)
                if (A.m[k][j] != 0) addcol(j, k, -(A.m[k][j] / A.m[k][k]));
            bool zeroed = true;
            for (int i = k + 1; i < 3; ++i) zeroed = zeroed && A.m[i][k] == 0;
            for (int j = k + 1; j < 3; ++j) zeroed = zeroed && A.m[k][j] == 0;
            if (zeroed) break;
        }
    }
    return {{A.m[0][0], A.m[1][1], A.m[2][2]}, V};
}

// basis of the full-rank lattice {x in Z^3 : A x = 0 mod m}
Mat3 kernel_mod(const Mat3& A, i64 m) {
    DiagResult dr = diagonalize_unimodular(A);
    Mat3 scale{};
    for (int i = 0; i < 3; ++i) scale.m[i][i] = m / std::gcd(dr.d[i], m);
    return dr.V * scale;
}

i64 inv_mod(i64 a, i64 m) {
    i64 r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::domain_error("element not invertible in Z/m");
    return ((s0 % m) + m) % m;
}

// restrict f to the sublattice spanned by the columns of B and divide by m
TernaryForm restrict_scaled(const TernaryForm& f, const Mat3& B, i64 m) {
    Mat3 G = B.transpose() * gram_matrix(f) * B;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (G.m[i][j] % m != 0)
                throw std::domain_error("sublattice Gram not divisible by the scale");
            G.m[i][j] /= m;
        }
    return form_from_gram(G);
}

// deterministic unimodular matrix with prescribed primitive third column
Mat3 complete_to_basis(const Vec3& v) {
    auto bezout = [](i64 x, i64 y) {
        i64 r0 = x, r1 = y, a0 = 1, a1 = 0, b0 = 0, b1 = 1;
        while (r1 != 0) {
            i64 q = floor_div(r0, r1);
            r0 -= q * r1;
            std::swap(r0, r1);
            a0 -= q * a1;
            std::swap(a0, a1);
            b0 -= q * b1;
            std::swap(b0, b1);
        }
        return std::array<i64, 3>{r0, a0, b0};  // g, a, b with a x + b y = g
    };
    Mat3 U;
    auto [g1, a0, a1] = bezout(v[0], v[1]);
    if (g1 < 0) { g1 = -g1; a0 = -a0; a1 = -a1; }
    if (g1 == 0) {
        // v = (0, 0, +-1)
        U = Mat3::from_columns({1, 0, 0}, {0, 1, 0}, v);
    } else {
        auto [g, b0, b1] = bezout(g1, v[2]);
        if (g < 0) { g = -g; b0 = -b0; b1 = -b1; }
        if (g != 1) throw std::domain_error("vector is not primitive");
        Vec3 c1 = {-a1, a0, 0};
        Vec3 c2 = {-b1 * (v[0] / g1), -b1 * (v[1] / g1), b0};
        U = Mat3::from_columns(c1, c2, v);
    }
    if (!U.is_unimodular()) throw std::logic_error("basis completion failed");
    return U;
}

}  // namespace

LehmanNormalForm lehman_normal_form(const TernaryForm& f, i64 p) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("lehman_normal_form requires an odd prime");
    if (!is_positive_definite(f)) throw std::domain_error("lehman_normal_form requires a positive definite form");
    i64 lvl = level(f);
    if (lvl % p != 0) throw std::domain_error("p does not divide the level");
    int g = valuation(lvl, p);
    int h = valuation(discriminant(f), p);
    if (g != 1) throw std::domain_error("lehman_normal_form supports only p || level (squarefree odd part)");
    if (h != 1 && h != 2) throw std::logic_error("unexpected discriminant valuation");

    Mat3 U = Mat3::identity();
    TernaryForm cur = f;
    auto apply = [&](const Mat3& E) {
        U = U * E;
        cur = transform(f, U);
    };
    auto val = [&](const Vec3& v) { return eval_form(cur, v); };

    // position 3: a vector with value prime to p
    {
        const Vec3 cands[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                              {1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}};
        Vec3 chosen{};
        bool found = false;
        for (const Vec3& v : cands)
            if (val(v) % p != 0) { chosen = v; found = true; break; }
        if (!found) throw std::logic_error("no unit value found; form not primitive at p");
        Mat3 C = complete_to_basis(chosen);
        // move the chosen vector into the third slot keeping det = +-1
        apply(C);
    }

    const i64 pK = p * p;  // clearing precision p^2 suffices for h <= 2
    auto e = [](int i) { Vec3 v{0, 0, 0}; v[i] = 1; return v; };
    auto add_col = [&](int dst, int src, i64 k) {
        Mat3 E = Mat3::identity();
        E.m[src][dst] = k;
        apply(E);
    };
    auto swap_col = [&](int i, int j) {
        Mat3 E{};
        for (int k = 0; k < 3; ++k) E.m[k][k] = (k == i || k == j) ? 0 : 1;
        E.m[i][j] = 1;
        E.m[j][i] = 1;
        apply(E);
    };

    // clear pairings with e3 modulo p^2
    for (int i = 0; i < 2; ++i) {
        i64 bi3 = bilinear(cur, e(i), e(2)) % pK;
        if (bi3 != 0) {
            i64 inv = inv_mod(2 * val(e(2)) % pK, pK);
            i64 lam = ((-(i128)bi3 * inv) % pK + pK) % pK;
            if (lam > pK / 2) lam -= pK;
            add_col(i, 2, lam);
        }
    }

    if (h == 1) {
        // block must contain a unit value at position 2
        if (val(e(1)) % p != 0) {
            // fine
        } else if (val(e(0)) % p != 0) {
            swap_col(0, 1);
        } else {
            add_col(1, 0, 1);  // e2 <- e1 + e2
            if (val(e(1)) % p == 0) throw std::logic_error("block rank defect at p");
        }
        i64 b01 = bilinear(cur, e(0), e(1)) % pK;
        if (b01 != 0) {
            i64 inv = inv_mod(2 * val(e(1)) % pK, pK);
            i64 lam = ((-(i128)b01 * inv) % pK + pK) % pK;
            if (lam > pK / 2) lam -= pK;
            add_col(0, 1, lam);
        }
    } else {
        // h == 2: the whole block is divisible by p; position 1 carries the
        // vector with value of exact valuation 1
        auto vp1 = [&](const Vec3& v) { return val(v) % (p * p) != 0 && val(v) % p == 0; };
        if (vp1(e(0))) {
            // fine
        } else if (vp1(e(1))) {
            swap_col(0, 1);
        } else {
            add_col(0, 1, 1);
            if (!vp1(e(0))) {
                add_col(0, 1, -2);  // e1 - e2 instead of e1 + e2
                if (!vp1(e(0))) throw std::logic_error("scaled block rank defect at p");
            }
        }
        i64 b01 = bilinear(cur, e(0), e(1));
        if (b01 % p != 0) throw std::logic_error("block pairing not divisible by p");
        i64 lam_den = val(e(0)) / p;  // unit mod p
        i64 lam = ((-(i128)(b01 / p) % p) * inv_mod(2 * lam_den % p, p) % p + p) % p;
        if (lam > p / 2) lam -= p;
        if (lam != 0) add_col(1, 0, lam);
    }

    // verify the divisibility pattern
    const TernaryForm& F = cur;
    bool ok = valuation(F.a, p) == g && F.c % p != 0 && F.s % p == 0 && F.t % p == 0;
    if (h - g >= 1) ok = ok && F.b % p == 0 && F.r % p == 0;
    if (!ok) throw std::logic_error("normal form pattern not reached");
    return LehmanNormalForm{cur, p, g, h, U};
}

TernaryForm phi_p(const TernaryForm& f, i64 p) {
    if (p == 2) return phi_2(f);
    if (!is_prime(p)) throw std::domain_error("phi_p requires a prime");
    if (!is_positive_definite(f) || !is_primitive(f))
        throw std::domain_error("phi_p requires a primitive positive definite form");
    i64 lvl = level(f);
    if (lvl % p != 0) throw std::domain_error("p does not divide the level");
    if (valuation(lvl, p) != 1) throw std::domain_error("phi_p supports only p || level");
    i64 d = discriminant(f);
    int h = valuation(d, p);

    Mat3 M = gram_matrix(f);
    TernaryForm out;
    if (h == 2) {
        // kernel of M mod p intersected with f = 0 mod p, then divide by p
        Mat3 B1 = kernel_mod(M, p);
        std::array<i64, 3> q;
        for (int j = 0; j < 3; ++j) q[j] = ((eval_form(f, B1.column(j)) % p) + p) % p;
        Mat3 Q{};
        Q.m[0] = {q[0], q[1], q[2]};
        Mat3 C = kernel_mod(Q, p);
        out = restrict_scaled(f, B1 * C, p);
    } else if (h == 1) {
        Mat3 B = kernel_mod(M, p);
        out = restrict_scaled(f, B, p);
    } else {
        throw std::domain_error("phi_p: discriminant valuation outside the level-4N family");
    }

    i64 expect = (h == 2) ? d / p : mulck(d, p);
    if (discriminant(out) != expect) throw std::logic_error("phi_p discriminant law violated");
    if (level(out) != lvl) throw std::logic_error("phi_p changed the level");
    return out;
}

TernaryForm phi_2(const TernaryForm& f) {
    if (!is_positive_definite(f) || !is_primitive(f))
        throw std::domain_error("phi_2 requires a primitive positive definite form");
    i64 lvl = level(f);
    i64 d = discriminant(f);
    if (lvl % 4 != 0 || valuation(lvl, 2) != 2 || d % 2 == 0)
        throw std::domain_error("phi_2 requires level 4N and odd discriminant");
    Mat3 B = kernel_mod(gram_matrix(f), 2);
    TernaryForm out = restrict_scaled(f, B, 1);
    if (discriminant(out) != 16 * d) throw std::logic_error("phi_2 discriminant law violated");
    if (level(out) != lvl) throw std::logic_error("phi_2 changed the level");
    return out;
}

WatsonResult watson(const TernaryForm& f, i64 m) {
    if (m <= 0) throw std::domain_error("watson requires a positive modulus");
    if (!is_positive_definite(f)) throw std::domain_error("watson requires a positive definite form");
    if (m == 1) return WatsonResult{f, Mat3::identity(), false};

    Mat3 M = gram_matrix(f);
    Mat3 B1 = kernel_mod(M, m);
    // within {M x = 0 mod m} the value map is additive mod m
    std::array<i64, 3> q;
    for (int j = 0; j < 3; ++j) q[j] = ((eval_form(f, B1.column(j)) % m) + m) % m;
    Mat3 Q{};
    Q.m[0] = {q[0], q[1], q[2]};
    Mat3 C = kernel_mod(Q, m);
    Mat3 B = B1 * C;
    TernaryForm g = restrict_scaled(f, B, m);  // throws if not integral
    return WatsonResult{g, B, m != 4};
}

}  // namespace tqf
