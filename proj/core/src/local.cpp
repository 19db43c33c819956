#include "tqf/local.hpp"

#include <algorithm>
#include <sstream>

namespace tqf {

i64 GenusLabel::anisotropic_product() const {
    i64 p = 1;
    for (i64 q : anisotropic) p = mulck(p, q);
    return p;
}

std::string GenusLabel::str() const {
    std::ostringstream os;
    os << "G_{" << level << ',' << disc << ',' << anisotropic_product() << '}';
    return os.str();
}

GenusLabel GenusLabel::parse(const std::string& text) {
    // accepted forms: "G_{L,d,t}" or "L,d,t"
    std::string body = text;
    if (body.rfind("G_{", 0) == 0 && body.back() == '}') body = body.substr(3, body.size() - 4);
    std::istringstream is(body);
    i64 L, d, t;
    char c1, c2;
    if (!(is >> L >> c1 >> d >> c2 >> t) || c1 != ',' || c2 != ',')
        throw std::invalid_argument("malformed genus label: \"" + text + "\"");
    GenusLabel g;
    g.level = L;
    g.disc = d;
    if (t != 1) {
        if (!is_squarefree(t)) throw std::invalid_argument("genus label subscript must be squarefree");
        g.anisotropic = prime_factors(t);
    }
    return g;
}

// ---------------------------------------------------------------------------
// rational diagonalization
// ---------------------------------------------------------------------------

namespace {

using RMat = std::array<std::array<Rational, 3>, 3>;

RMat half_gram(const TernaryForm& f) {
    RMat A;
    A[0] = {Rational(f.a), Rational(f.t, 2), Rational(f.s, 2)};
    A[1] = {Rational(f.t, 2), Rational(f.b), Rational(f.r, 2)};
    A[2] = {Rational(f.s, 2), Rational(f.r, 2), Rational(f.c)};
    return A;
}

void add_column(RMat& A, RMat& P, int dst, int src, const Rational& lam) {
    // symmetric congruence step: col_dst += lam * col_src (and same for rows)
    for (int i = 0; i < 3; ++i) A[i][dst] += lam * A[i][src];
    for (int j = 0; j < 3; ++j) A[dst][j] += lam * A[src][j];
    for (int i = 0; i < 3; ++i) P[i][dst] += lam * P[i][src];
}

void swap_columns(RMat& A, RMat& P, int i, int j) {
    for (int k = 0; k < 3; ++k) std::swap(A[k][i], A[k][j]);
    for (int k = 0; k < 3; ++k) std::swap(A[i][k], A[j][k]);
    for (int k = 0; k < 3; ++k) std::swap(P[k][i], P[k][j]);
}

}  // namespace

DiagonalizationWitness diagonalize_with_witness(const TernaryForm& f) {
    if (discriminant(f) == 0) throw std::domain_error("diagonalize requires a nondegenerate form");
    RMat A = half_gram(f);
    RMat P;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) P[i][j] = Rational(i == j ? 1 : 0);

    for (int k = 0; k < 3; ++k) {
        if (A[k][k].is_zero()) {
            int pivot = -1;
            for (int j = k + 1; j < 3; ++j)
                if (!A[j][j].is_zero()) { pivot = j; break; }
            if (pivot >= 0) {
                swap_columns(A, P, k, pivot);
            } else {
                int off = -1;
                for (int j = k + 1; j < 3; ++j)
                    if (!A[k][j].is_zero()) { off = j; break; }
                if (off < 0) throw std::domain_error("diagonalize: degenerate block");
                add_column(A, P, k, off, Rational(1));
            }
        }
        for (int j = k + 1; j < 3; ++j) {
            if (A[k][j].is_zero()) continue;
            Rational lam = -(A[k][j] / A[k][k]);
            add_column(A, P, j, k, lam);
        }
    }
    DiagonalizationWitness w;
    w.entries = {A[0][0], A[1][1], A[2][2]};
    w.P = P;
    return w;
}

DiagonalForm diagonalize(const TernaryForm& f) {
    return DiagonalForm{diagonalize_with_witness(f).entries};
}

// ---------------------------------------------------------------------------
// Hilbert symbol
// ---------------------------------------------------------------------------

namespace {

// p-valuation and odd/unit part of a nonzero rational, as residues
struct PParts {
    int val;        // v_p(x) mod 2 is what matters, full value kept anyway
    i64 unit_mod;   // unit part modulo p (odd p) or modulo 8 (p = 2)
};

PParts p_parts(const Rational& x, i64 p, i64 modulus) {
    bigint num = x.num(), den = x.den();
    int v = 0;
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    bigint nm = num % modulus, dm = den % modulus;
    if (nm < 0) nm += modulus;
    if (dm < 0) dm += modulus;
    i64 n_ = nm.convert_to<i64>(), d_ = dm.convert_to<i64>();
    // invert d_ modulo the modulus (extended Euclid)
    i64 r0 = modulus, r1 = d_, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::logic_error("unit part not invertible");
    i64 dinv = ((s0 % modulus) + modulus) % modulus;
    return {v, to_i64(i128(n_) * dinv % modulus)};
}

}  // namespace

int hilbert_symbol(const Rational& u, const Rational& v, i64 p) {
    if (u.is_zero() || v.is_zero()) throw std::domain_error("hilbert symbol of zero");
    if (!is_prime(p)) throw std::domain_error("hilbert symbol requires a prime");
    if (p == 2) {
        PParts a = p_parts(u, 2, 8), b = p_parts(v, 2, 8);
        auto eps = [](i64 x) { return (x % 4 == 3) ? 1 : 0; };
        auto omega = [](i64 x) { return (x % 8 == 3 || x % 8 == 5) ? 1 : 0; };
        int e = eps(a.unit_mod) * eps(b.unit_mod) + a.val * omega(b.unit_mod) + b.val * omega(a.unit_mod);
        return (e % 2 == 0) ? 1 : -1;
    }
    PParts a = p_parts(u, p, p), b = p_parts(v, p, p);
    int result = 1;
    if ((a.val % 2 != 0) && (b.val % 2 != 0) && kronecker(-1, p) == -1) result = -result;
    if (b.val % 2 != 0) result *= kronecker(a.unit_mod, p);
    if (a.val % 2 != 0) result *= kronecker(b.unit_mod, p);
    return result;
}

int hasse_invariant(const TernaryForm& f, i64 p) {
    DiagonalForm d = diagonalize(f);
    const Rational &a = d.entries[0], &b = d.entries[1], &c = d.entries[2];
    Rational minus_one(-1);
    int s = hilbert_symbol(a, minus_one, p) * hilbert_symbol(b, minus_one, p) *
            hilbert_symbol(c, minus_one, p);
    s *= hilbert_symbol(a, b, p) * hilbert_symbol(b, c, p) * hilbert_symbol(c, a, p);
    return s;
}

int isotropy_symbol(const TernaryForm& f, i64 p) {
    int s = hasse_invariant(f, p);
    return p == 2 ? -s : s;
}

std::vector<i64> anisotropic_primes(const TernaryForm& f) {
    if (!is_positive_definite(f)) throw std::domain_error("anisotropic_primes requires a positive definite form");
    i64 d = discriminant(f);
    std::vector<i64> out;
    std::vector<i64> candidates = prime_factors(2 * d);
    for (i64 p : candidates)
        if (isotropy_symbol(f, p) == -1) out.push_back(p);
    std::sort(out.begin(), out.end());
    if (out.size() % 2 == 0)
        throw std::logic_error("anisotropic prime set has even cardinality; reciprocity violated");
    return out;
}

GenusLabel genus_label_unchecked(const TernaryForm& f) {
    GenusLabel g;
    g.level = level(f);
    g.disc = discriminant(f);
    g.anisotropic = anisotropic_primes(f);
    return g;
}

GenusLabel genus_label(const TernaryForm& f) {
    if (!is_primitive(f)) throw std::domain_error("genus_label requires a primitive form");
    GenusLabel g = genus_label_unchecked(f);
    if (g.level % 4 != 0) throw std::domain_error("level is not of the form 4N");
    i64 N = g.level / 4;
    if (N % 2 == 0 || !is_squarefree(N))
        throw std::domain_error("genus classification covers only levels 4N with N odd squarefree (got level " +
                                std::to_string(g.level) + ")");
    return g;
}

}  // namespace tqf
