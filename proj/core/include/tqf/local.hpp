#pragma once

#include <array>
#include <string>
#include <vector>

#include "tqf/form.hpp"
#include "tqf/rational.hpp"

namespace tqf {

// rational diagonalization f ~_Q a x^2 + b y^2 + c z^2
struct DiagonalForm {
    std::array<Rational, 3> entries;
};

// Genus of a primitive positive definite ternary form of level 4N (N odd
// squarefree): the triple (level, discriminant, set of anisotropic primes)
// is a complete genus invariant for that family.
struct GenusLabel {
    i64 level = 0;
    i64 disc = 0;
    std::vector<i64> anisotropic;  // sorted primes

    i64 anisotropic_product() const;
    std::string str() const;  // "G_{level,disc,t}" with t the product of the primes
    static GenusLabel parse(const std::string& text);

    friend bool operator==(const GenusLabel&, const GenusLabel&) = default;
    friend auto operator<=>(const GenusLabel&, const GenusLabel&) = default;
};

DiagonalForm diagonalize(const TernaryForm& f);

// diagonalization together with rational P with P^T (M/2) P = diag(entries);
// used by tests to certify the congruence
struct DiagonalizationWitness {
    std::array<Rational, 3> entries;
    std::array<std::array<Rational, 3>, 3> P;
};
DiagonalizationWitness diagonalize_with_witness(const TernaryForm& f);

// p-adic Hilbert symbol (u,v)_p for nonzero rationals, +1 or -1
int hilbert_symbol(const Rational& u, const Rational& v, i64 p);

// Hasse invariant S_p(f) of the rational equivalence class
int hasse_invariant(const TernaryForm& f, i64 p);

// modified symbol S*_p = (-1)^{[p=2]} S_p; -1 iff f is anisotropic over Q_p
int isotropy_symbol(const TernaryForm& f, i64 p);

// {p : S*_p(f) = -1}; always of odd cardinality for positive definite f
std::vector<i64> anisotropic_primes(const TernaryForm& f);

// complete genus invariant for level 4N, N odd squarefree; rejects other levels
GenusLabel genus_label(const TernaryForm& f);

// same triple without the level-family validation (bookkeeping only)
GenusLabel genus_label_unchecked(const TernaryForm& f);

}  // namespace tqf
