#pragma once

#include <map>
#include <string>
#include <vector>

#include "tqf/form.hpp"
#include "tqf/hurwitz.hpp"
#include "tqf/local.hpp"

namespace tqf {

struct ClassRecord {
    TernaryForm form;  // canonical representative
    i64 aut = 0;
    GenusLabel genus;
};

// complete set of equivalence classes of primitive positive definite ternary
// forms of level 4N, partitioned by genus
struct ClassInventory {
    i64 level = 0;
    std::vector<ClassRecord> classes;
    std::map<GenusLabel, std::vector<size_t>> partition;

    const std::vector<size_t>& cell(const GenusLabel& g) const;
};

struct EnumerationOptions {
    int jobs = 1;
    i64 candidate_budget = 2'000'000'000;  // resource guard on loop iterations
};

// exhaustive enumeration for N odd squarefree; the class count is checked
// against the closed class-number formula before returning
ClassInventory enumerate_classes(i64 N, const EnumerationOptions& opts = {});

// sum of 1/|Aut(f)| over the classes of a genus
Rational genus_mass(const ClassInventory& inv, const GenusLabel& g);

// sum of R_f(n)/|Aut(f)| over the classes of a genus
Rational weighted_representation(const ClassInventory& inv, const GenusLabel& g, i64 n);

// The four genus families of level 4N and the parameters of their weighted
// representation identity: weighted sum = 2^{-pow} H^{(N1,N2)}(arg_scale * n).
enum class GenusFamily { OddDisc, FourDiscOdd, FourDiscEven, SixteenDisc };

struct GenusShape {
    GenusFamily family;
    i64 Nr = 1;         // divisor of N with disc = {1,4,16} * N^2 / Nr
    i64 N1 = 1, N2 = 1; // modified class number parameters
    int pow = 0;        // two-power exponent
    i64 arg_scale = 1;  // argument multiplier
};

GenusShape classify_genus(const GenusLabel& g);

// right side of the weighted representation identity for genus g at n
Rational expected_weighted(const GenusLabel& g, i64 n);

// line-delimited JSON cache format, one record per class
std::string inventory_to_jsonl(const ClassInventory& inv);
ClassInventory inventory_from_jsonl(const std::string& text);

}  // namespace tqf
