#pragma once

#include "tqf/form.hpp"

namespace tqf {

// f transformed to the coefficient divisibility pattern
// (p^g a, p^{h-g} b, c, p^{h-g} r, p^g s, p^g t) with p not dividing a*c,
// where g = v_p(level), h = v_p(disc). U witnesses equivalence with the input.
struct LehmanNormalForm {
    TernaryForm form;
    i64 p = 0;
    int g = 0;
    int h = 0;
    Mat3 U;  // U^T Gram(input) U = Gram(form)
};

LehmanNormalForm lehman_normal_form(const TernaryForm& f, i64 p);

// class bijection C(N', p^h d') -> C(N', p^{3g-h} d') for odd p | level;
// preserves level, automorph count, and the anisotropy set
TernaryForm phi_p(const TernaryForm& f, i64 p);

// class bijection C(4N, N^2/N_r) -> C(4N, 16 N^2/N_r)
TernaryForm phi_2(const TernaryForm& f);

struct WatsonResult {
    TernaryForm form;   // g with g(y) = f(B y)/m
    Mat3 basis;         // columns span the congruence sublattice
    bool experimental;  // true unless m is 1 or 4
};

// Watson transformation lambda_m on the sublattice
// {x : f(x+z) = f(z) mod m for all z}
WatsonResult watson(const TernaryForm& f, i64 m);

}  // namespace tqf
