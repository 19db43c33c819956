#pragma once

#include "tqf/arith.hpp"
#include "tqf/rational.hpp"

namespace tqf {

// Hurwitz class number H(D): automorphism-weighted count of positive binary
// quadratic forms of discriminant -D; H(0) = -1/12, zero for D = 1,2 mod 4.
// Memoized; the memo is safe for concurrent callers.
Rational hurwitz_H(i64 D);

// Modified class number H^(N1,N2)(D) for coprime squarefree N1, N2: H twisted
// by local factors at the primes of N1 and N2 after conductor extraction.
Rational modified_H(i64 N1, i64 N2, i64 D);

// number of isomorphism classes of Eichler orders of level F in the definite
// quaternion algebra ramified at the primes of N (N with an odd number of
// prime factors, F squarefree coprime to N)
i64 type_number(i64 N, i64 F);

// number of classes of primitive positive definite ternary forms of level 4N,
// N odd squarefree, by the closed class-number formula
i64 class_number_4N(i64 N);

}  // namespace tqf
