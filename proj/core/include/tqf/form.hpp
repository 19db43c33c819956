#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqf/arith.hpp"
#include "tqf/mat.hpp"

namespace tqf {

// Integral ternary quadratic form a x^2 + b y^2 + c z^2 + r yz + s xz + t xy,
// written (a,b,c,r,s,t). Its Gram matrix has diagonal (2a,2b,2c) and
// off-diagonal entries t, s, r.
struct TernaryForm {
    i64 a = 0, b = 0, c = 0, r = 0, s = 0, t = 0;

    friend bool operator==(const TernaryForm&, const TernaryForm&) = default;
    friend auto operator<=>(const TernaryForm&, const TernaryForm&) = default;

    // canonical textual encoding "a,b,c,r,s,t"
    std::string str() const;
    static TernaryForm parse(const std::string& text);
};

struct FormInvariants {
    i64 discriminant = 0;  // det(Gram)/2 = 4abc + rst - ar^2 - bs^2 - ct^2
    i64 divisor = 0;       // gcd of the six cofactor quantities
    i64 level = 0;         // smallest N with N * Gram^{-1} even; equals 4d/m
    bool primitive = false;
    i64 aut_count = 0;     // order of the automorph group
};

// U in GL3(Z) with U^T M_g U = M_f, witnessing f ~ g
struct IsometryWitness {
    Mat3 U;
};

Mat3 gram_matrix(const TernaryForm& f);
TernaryForm form_from_gram(const Mat3& M);  // throws if M is not an even symmetric matrix

// value f(v) and polarized bilinear value u^T M v (both exact)
i64 eval_form(const TernaryForm& f, const Vec3& v);
i64 bilinear(const TernaryForm& f, const Vec3& u, const Vec3& v);

i64 discriminant(const TernaryForm& f);
i64 divisor(const TernaryForm& f);
i64 level(const TernaryForm& f);  // positive definite input
bool is_positive_definite(const TernaryForm& f);
bool is_primitive(const TernaryForm& f);

// g(x) = f(Ux), i.e. Gram(g) = U^T Gram(f) U
TernaryForm transform(const TernaryForm& f, const Mat3& U);

// all invariants; rejects non-positive-definite input
FormInvariants invariants(const TernaryForm& f);

// number of integer triples X with f(X) = n
i64 represent_count(const TernaryForm& f, i64 n);

// same, restricted to solutions with z = parity (mod 2); parity in {0,1}
i64 represent_count_z_parity(const TernaryForm& f, i64 n, int parity);

// all nonzero vectors v with f(v) <= bound (both signs included)
std::vector<Vec3> short_vectors(const TernaryForm& f, i64 bound);

// canonical class representative; reduce(f) == reduce(g) iff f ~ g
TernaryForm reduce(const TernaryForm& f);

// canonical representative together with U such that U^T Gram(f) U = Gram(reduced)
std::pair<TernaryForm, Mat3> reduce_with_witness(const TernaryForm& f);

// witness U with U^T M_g U = M_f if the forms are integrally equivalent
std::optional<IsometryWitness> is_equivalent(const TernaryForm& f, const TernaryForm& g);

// the full finite group {U : U^T M_f U = M_f}
std::vector<Mat3> automorphisms(const TernaryForm& f);
i64 automorphism_count(const TernaryForm& f);

// Lehman's level/discriminant exponent constraints; true iff the pair (level,
// discriminant) has an admissible factorization pattern
bool level_discriminant_admissible(i64 level, i64 disc);

}  // namespace tqf
