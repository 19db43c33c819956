#include "tqf/form.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace tqf {

std::string TernaryForm::str() const {
    std::ostringstream os;
    os << a << ',' << b << ',' << c << ',' << r << ',' << s << ',' << t;
    return os.str();
}

TernaryForm TernaryForm::parse(const std::string& text) {
    std::istringstream is(text);
    i64 v[6];
    char sep;
    for (int i = 0; i < 6; ++i) {
        if (!(is >> v[i])) throw std::invalid_argument("malformed form string: \"" + text + "\"");
        if (i < 5 && !(is >> sep && sep == ',')) throw std::invalid_argument("malformed form string: \"" + text + "\"");
    }
    if (is >> sep) throw std::invalid_argument("trailing characters in form string: \"" + text + "\"");
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

Mat3 gram_matrix(const TernaryForm& f) {
    Mat3 M;
    M.m = {{{2 * f.a, f.t, f.s}, {f.t, 2 * f.b, f.r}, {f.s, f.r, 2 * f.c}}};
    return M;
}

TernaryForm form_from_gram(const Mat3& M) {
    for (int i = 0; i < 3; ++i) {
        if (M.m[i][i] % 2 != 0) throw std::invalid_argument("Gram matrix has odd diagonal entry");
        for (int j = 0; j < 3; ++j)
            if (M.m[i][j] != M.m[j][i]) throw std::invalid_argument("Gram matrix is not symmetric");
    }
    return {M.m[0][0] / 2, M.m[1][1] / 2, M.m[2][2] / 2, M.m[1][2], M.m[0][2], M.m[0][1]};
}

i64 eval_form(const TernaryForm& f, const Vec3& v) {
    i128 x = v[0], y = v[1], z = v[2];
    i128 val = i128(f.a) * x * x + i128(f.b) * y * y + i128(f.c) * z * z + i128(f.r) * y * z +
               i128(f.s) * x * z + i128(f.t) * x * y;
    return to_i64(val);
}

i64 bilinear(const TernaryForm& f, const Vec3& u, const Vec3& v) {
    // u^T M v with M the Gram matrix
    i128 acc = 0;
    const i64 M[3][3] = {{2 * f.a, f.t, f.s}, {f.t, 2 * f.b, f.r}, {f.s, f.r, 2 * f.c}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc += i128(u[i]) * M[i][j] * v[j];
    return to_i64(acc);
}

i64 discriminant(const TernaryForm& f) {
    i128 d = 4 * i128(f.a) * f.b * f.c + i128(f.r) * f.s * f.t - i128(f.a) * f.r * f.r -
             i128(f.b) * f.s * f.s - i128(f.c) * f.t * f.t;
    return to_i64(d);
}

namespace {

// the six cofactor quantities of the Gram matrix (its adjugate entries)
struct Cofactors {
    i64 m11, m22, m33, m23, m13, m12;
};

Cofactors cofactors(const TernaryForm& f) {
    Cofactors k;
    k.m11 = to_i64(4 * i128(f.b) * f.c - i128(f.r) * f.r);
    k.m22 = to_i64(4 * i128(f.a) * f.c - i128(f.s) * f.s);
    k.m33 = to_i64(4 * i128(f.a) * f.b - i128(f.t) * f.t);
    k.m23 = to_i64(i128(f.s) * f.t - 2 * i128(f.a) * f.r);
    k.m13 = to_i64(i128(f.r) * f.t - 2 * i128(f.b) * f.s);
    k.m12 = to_i64(i128(f.r) * f.s - 2 * i128(f.c) * f.t);
    return k;
}

}  // namespace

i64 divisor(const TernaryForm& f) {
    Cofactors k = cofactors(f);
    i64 g = 0;
    for (i64 v : {k.m11, k.m22, k.m33, 2 * k.m23, 2 * k.m13, 2 * k.m12}) g = std::gcd(g, v);
    return g;
}

bool is_positive_definite(const TernaryForm& f) {
    if (f.a <= 0) return false;
    if (4 * i128(f.a) * f.b - i128(f.t) * f.t <= 0) return false;
    return discriminant(f) > 0;
}

bool is_primitive(const TernaryForm& f) {
    i64 g = 0;
    for (i64 v : {f.a, f.b, f.c, f.r, f.s, f.t}) g = std::gcd(g, v);
    return g == 1;
}

i64 level(const TernaryForm& f) {
    if (!is_positive_definite(f)) throw std::domain_error("level requires a positive definite form");
    i64 d = discriminant(f);
    i64 m = divisor(f);
    i64 lvl = 4 * d / m;
    if (i128(lvl) * m != i128(4) * d) throw std::logic_error("divisor does not divide 4d");

    // cross-check against the defining property: lvl is the least N for which
    // N * M^{-1} = N * adj(M)/(2d) is integral with even diagonal
    Cofactors k = cofactors(f);
    i64 need = 1;
    for (i64 adj : {k.m11, k.m22, k.m33}) need = std::lcm(need, 4 * d / std::gcd(4 * d, adj));
    for (i64 adj : {k.m23, k.m13, k.m12}) {
        i64 a2 = adj == 0 ? 2 * d : adj;
        need = std::lcm(need, 2 * d / std::gcd(2 * d, a2));
    }
    if (need != lvl) throw std::logic_error("level cross-check failed: 4d/m disagrees with N*M^{-1} condition");
    return lvl;
}

TernaryForm transform(const TernaryForm& f, const Mat3& U) {
    Mat3 M = gram_matrix(f);
    return form_from_gram(U.transpose() * M * U);
}

// ---------------------------------------------------------------------------
// representation counting
// ---------------------------------------------------------------------------

namespace {

i64 count_representations(const TernaryForm& f, i64 n, int parity) {
    if (n < 0) return 0;
    if (!is_positive_definite(f)) throw std::domain_error("represent_count requires a positive definite form");
    const i128 a = f.a, b = f.b, c = f.c, r = f.r, s = f.s, t = f.t;
    const i128 A2 = 4 * a * b - t * t;
    const i128 d = discriminant(f);
    i64 count = 0;
    const i64 zmax = to_i64(isqrt(i128(n) * A2 / d));
    for (i64 z = -zmax; z <= zmax; ++z) {
        if (parity >= 0 && ((z % 2 + 2) % 2) != parity) continue;
        // x-solvability condition as a quadratic in y:
        //   A2*y^2 - 2z(ts-2ar)*y - ((s^2-4ac)z^2 + 4an) <= 0
        const i128 Q = 2 * i128(z) * (t * s - 2 * a * r);
        const i128 R0 = (s * s - 4 * a * c) * i128(z) * z + 4 * a * i128(n);
        const i128 D1 = Q * Q + 4 * A2 * R0;
        if (D1 < 0) continue;
        const i128 sq = isqrt(D1);
        const i64 ylo = to_i64(ceil_div(Q - sq, 2 * A2));
        const i64 yhi = to_i64(floor_div(Q + sq, 2 * A2));
        for (i64 y = ylo; y <= yhi; ++y) {
            const i128 beta = t * y + s * z;
            const i128 gamma = b * i128(y) * y + r * i128(y) * z + c * i128(z) * z - n;
            const i128 disc = beta * beta - 4 * a * gamma;
            if (disc < 0) continue;
            const i128 q = isqrt(disc);
            if (q * q != disc) continue;
            if ((-beta + q) % (2 * a) == 0) ++count;
            if (q != 0 && (-beta - q) % (2 * a) == 0) ++count;
        }
    }
    return count;
}

}  // namespace

i64 represent_count(const TernaryForm& f, i64 n) { return count_representations(f, n, -1); }

i64 represent_count_z_parity(const TernaryForm& f, i64 n, int parity) {
    if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    return count_representations(f, n, parity);
}

std::vector<Vec3> short_vectors(const TernaryForm& f, i64 bound) {
    if (!is_positive_definite(f)) throw std::domain_error("short_vectors requires a positive definite form");
    std::vector<Vec3> out;
    if (bound <= 0) return out;
    const i128 a = f.a, b = f.b, c = f.c, r = f.r, s = f.s, t = f.t;
    const i128 A2 = 4 * a * b - t * t;
    const i128 d = discriminant(f);
    const i64 zmax = to_i64(isqrt(i128(bound) * A2 / d));
    for (i64 z = -zmax; z <= zmax; ++z) {
        const i128 Q = 2 * i128(z) * (t * s - 2 * a * r);
        const i128 R0 = (s * s - 4 * a * c) * i128(z) * z + 4 * a * i128(bound);
        const i128 D1 = Q * Q + 4 * A2 * R0;
        if (D1 < 0) continue;
        const i128 sq = isqrt(D1);
        const i64 ylo = to_i64(ceil_div(Q - sq, 2 * A2));
        const i64 yhi = to_i64(floor_div(Q + sq, 2 * A2));
        for (i64 y = ylo; y <= yhi; ++y) {
            const i128 beta = t * y + s * z;
            const i128 gamma = b * i128(y) * y + r * i128(y) * z + c * i128(z) * z - bound;
            const i128 disc = beta * beta - 4 * a * gamma;
            if (disc < 0) continue;
            const i128 q = isqrt(disc);
            const i64 xlo = to_i64(ceil_div(-beta - q, 2 * a));
            const i64 xhi = to_i64(floor_div(-beta + q, 2 * a));
            for (i64 x = xlo; x <= xhi; ++x) {
                if (x == 0 && y == 0 && z == 0) continue;
                out.push_back({x, y, z});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// reduction and isometry search
// ---------------------------------------------------------------------------

namespace {

i64 nearest_int(i64 p, i64 q) {
    // round(p/q) for q > 0, ties toward +inf; any fixed tie rule works here
    return floor_div(2 * p + q, 2 * q);
}

// cheap descent: column permutations, sign flips and shears until no single
// step decreases a diagonal entry
std::pair<TernaryForm, Mat3> greedy_reduce(const TernaryForm& f) {
    Mat3 U = Mat3::identity();
    Vec3 cols[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto value = [&](int i) { return eval_form(f, cols[i]); };

    bool changed = true;
    while (changed) {
        changed = false;
        // keep f(b1) <= f(b2) <= f(b3)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2 - i; ++j)
                if (value(j) > value(j + 1)) std::swap(cols[j], cols[j + 1]);
        // shear steps b_i <- b_i + k b_j
        for (int i = 0; i < 3 && !changed; ++i)
            for (int j = 0; j < 3 && !changed; ++j) {
                if (i == j) continue;
                i64 bij = bilinear(f, cols[i], cols[j]);
                i64 k = nearest_int(-bij, bilinear(f, cols[j], cols[j]));
                if (k == 0) continue;
                Vec3 cand = cols[i] + k * cols[j];
                if (eval_form(f, cand) < value(i)) {
                    cols[i] = cand;
                    changed = true;
                }
            }
        // occasional three-term improvement on the longest vector
        for (int e1 = -1; e1 <= 1 && !changed; e1 += 2)
            for (int e2 = -1; e2 <= 1 && !changed; e2 += 2) {
                Vec3 cand = cols[2] + e1 * cols[0] + e2 * cols[1];
                if (eval_form(f, cand) < value(2)) {
                    cols[2] = cand;
                    changed = true;
                }
            }
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2 - i; ++j)
            if (value(j) > value(j + 1)) std::swap(cols[j], cols[j + 1]);
    U = Mat3::from_columns(cols[0], cols[1], cols[2]);
    return {transform(f, U), U};
}

i64 det_columns(const Vec3& u, const Vec3& v, const Vec3& w) {
    i128 d = i128(u[0]) * (i128(v[1]) * w[2] - i128(v[2]) * w[1]) -
             i128(v[0]) * (i128(u[1]) * w[2] - i128(u[2]) * w[1]) +
             i128(w[0]) * (i128(u[1]) * v[2] - i128(u[2]) * v[1]);
    return to_i64(d);
}

bool primitive_pair(const Vec3& u, const Vec3& v) {
    i64 m1 = u[1] * v[2] - u[2] * v[1];
    i64 m2 = u[0] * v[2] - u[2] * v[0];
    i64 m3 = u[0] * v[1] - u[1] * v[0];
    i64 g = std::gcd(std::gcd(std::abs(m1), std::abs(m2)), std::abs(m3));
    return g == 1;
}

bool sign_normalized(i64 r, i64 s, i64 t) {
    return (r >= 0 && s >= 0 && t >= 0) || (r <= 0 && s <= 0 && t <= 0);
}

struct Canonical {
    TernaryForm h;
    Mat3 U;  // U^T Gram(f) U = Gram(h)
};

Canonical canonicalize(const TernaryForm& f) {
    if (!is_positive_definite(f)) throw std::domain_error("reduce requires a positive definite form");
    if (discriminant(f) == 0) throw std::domain_error("degenerate (singular) form rejected");
    auto [g, U0] = greedy_reduce(f);

    i64 bound = std::max({g.a, g.b, g.c});
    for (;;) {
        std::vector<Vec3> V = short_vectors(g, bound);
        std::map<i64, std::vector<Vec3>> buckets;
        for (auto& v : V) buckets[eval_form(g, v)].push_back(v);

        i64 amin = buckets.begin()->first;
        // least value extending a minimal vector to a primitive pair
        i64 bmin = -1;
        for (auto& [val, vecs] : buckets) {
            if (val < amin) continue;
            for (auto& w : vecs) {
                for (auto& v1 : buckets[amin])
                    if (primitive_pair(v1, w)) { bmin = val; break; }
                if (bmin >= 0) break;
            }
            if (bmin >= 0) break;
        }
        if (bmin < 0) { bound *= 2; continue; }
        // least value completing such a pair to a unimodular basis
        i64 cmin = -1;
        for (auto& [val, vecs] : buckets) {
            if (val < bmin) continue;
            for (auto& u : vecs) {
                for (auto& v1 : buckets[amin]) {
                    for (auto& v2 : buckets[bmin]) {
                        i64 dd = det_columns(v1, v2, u);
                        if (dd == 1 || dd == -1) { cmin = val; break; }
                    }
                    if (cmin >= 0) break;
                }
                if (cmin >= 0) break;
            }
            if (cmin >= 0) break;
        }
        if (cmin < 0) { bound *= 2; continue; }

        // all bases with diagonal values (amin, bmin, cmin); keep the
        // lexicographically least sign-normalized (r,s,t)
        bool have = false;
        std::tuple<i64, i64, i64> best{};
        Vec3 bv1{}, bv2{}, bv3{};
        for (auto& v1 : buckets[amin])
            for (auto& v2 : buckets[bmin]) {
                if (!primitive_pair(v1, v2)) continue;
                i64 tt = bilinear(g, v1, v2);
                for (auto& v3 : buckets[cmin]) {
                    i64 dd = det_columns(v1, v2, v3);
                    if (dd != 1 && dd != -1) continue;
                    i64 rr = bilinear(g, v2, v3);
                    i64 ss = bilinear(g, v1, v3);
                    if (!sign_normalized(rr, ss, tt)) continue;
                    auto key = std::make_tuple(rr, ss, tt);
                    if (!have || key < best) {
                        have = true;
                        best = key;
                        bv1 = v1; bv2 = v2; bv3 = v3;
                    }
                }
            }
        if (!have) { bound *= 2; continue; }

        Mat3 W = Mat3::from_columns(bv1, bv2, bv3);
        Canonical out;
        out.U = U0 * W;
        out.h = TernaryForm{eval_form(g, bv1), eval_form(g, bv2), eval_form(g, bv3),
                            std::get<0>(best), std::get<1>(best), std::get<2>(best)};
        return out;
    }
}

}  // namespace

TernaryForm reduce(const TernaryForm& f) { return canonicalize(f).h; }

std::pair<TernaryForm, Mat3> reduce_with_witness(const TernaryForm& f) {
    Canonical c = canonicalize(f);
    return {c.h, c.U};
}

std::optional<IsometryWitness> is_equivalent(const TernaryForm& f, const TernaryForm& g) {
    if (!is_positive_definite(f) || !is_positive_definite(g))
        throw std::domain_error("is_equivalent requires positive definite forms");
    if (discriminant(f) != discriminant(g)) return std::nullopt;
    Canonical cf = canonicalize(f);
    Canonical cg = canonicalize(g);
    if (cf.h != cg.h) return std::nullopt;
    Mat3 W = cg.U * cf.U.inverse_unimodular();
    // W^T M_g W = M_f
    if (transform(g, W) != f) throw std::logic_error("isometry witness check failed");
    return IsometryWitness{W};
}

std::vector<Mat3> automorphisms(const TernaryForm& f) {
    if (!is_positive_definite(f)) throw std::domain_error("automorphisms requires a positive definite form");
    // search on the canonical representative, conjugate witnesses back
    Canonical cf = canonicalize(f);
    const TernaryForm& h = cf.h;
    i64 bound = std::max({h.a, h.b, h.c});
    std::vector<Vec3> V = short_vectors(h, bound);
    std::vector<Vec3> va, vb, vc;
    for (auto& v : V) {
        i64 val = eval_form(h, v);
        if (val == h.a) va.push_back(v);
        if (val == h.b) vb.push_back(v);
        if (val == h.c) vc.push_back(v);
    }
    std::vector<Mat3> out;
    for (auto& v1 : va)
        for (auto& v2 : vb) {
            if (bilinear(h, v1, v2) != h.t) continue;
            for (auto& v3 : vc) {
                if (bilinear(h, v1, v3) != h.s) continue;
                if (bilinear(h, v2, v3) != h.r) continue;
                i64 dd = det_columns(v1, v2, v3);
                if (dd != 1 && dd != -1) continue;
                out.push_back(Mat3::from_columns(v1, v2, v3));
            }
        }
    Mat3 Uinv = cf.U.inverse_unimodular();
    for (auto& W : out) W = cf.U * W * Uinv;
    return out;
}

i64 automorphism_count(const TernaryForm& f) { return i64(automorphisms(f).size()); }

FormInvariants invariants(const TernaryForm& f) {
    if (!is_positive_definite(f)) throw std::domain_error("invariants requires a positive definite form");
    FormInvariants inv;
    inv.discriminant = discriminant(f);
    inv.divisor = divisor(f);
    inv.level = level(f);
    inv.primitive = is_primitive(f);
    inv.aut_count = automorphism_count(f);
    return inv;
}

bool level_discriminant_admissible(i64 lvl, i64 disc) {
    if (lvl <= 0 || disc <= 0) return false;
    auto lf = factorize(lvl);
    auto df = factorize(disc);
    // every prime of disc must divide the level
    for (auto& [p, e] : df) {
        bool found = false;
        for (auto& [q, eq] : lf) found = found || q == p;
        if (!found) return false;
    }
    int n0 = 0, d0 = 0;
    bool all_even = true;
    bool some_odd_di_odd = false;
    for (auto& [p, e] : lf) {
        int de = 0;
        for (auto& [q, eq] : df)
            if (q == p) de = eq;
        if (p == 2) {
            n0 = e;
            d0 = de;
        } else {
            if (!(e <= de && de <= 2 * e)) return false;
            if (e % 2 != 0) all_even = false;
            if (de % 2 != 0) some_odd_di_odd = true;
        }
    }
    if (n0 < 2) return false;
    bool middle = (n0 <= d0 && d0 <= 2 * n0 - 2);
    if (!(d0 == n0 - 2 || d0 == 2 * n0 || middle)) return false;
    if (n0 % 2 != 0) all_even = false;
    if (all_even && !(middle || some_odd_di_odd)) return false;
    return true;
}

}  // namespace tqf
