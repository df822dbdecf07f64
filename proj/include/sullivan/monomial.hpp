#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sullivan/generator.hpp"

namespace sullivan {

// Canonical graded-commutative monomial over a fixed generator universe.
// Factors are stored as (generator index, exponent) sorted by index; odd
// generators carry exponent 1 (odd squares vanish). The unit monomial is the
// empty factor list. The codegree is cached at construction.
class Monomial {
public:
    Monomial() = default;  // unit

    // Factors must be sorted by index with positive exponents and exponent 1
    // on odd generators; throws StructuralError otherwise.
    static Monomial from_sorted(std::vector<std::pair<int, int>> factors, const GeneratorSet& gens);

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int codegree() const { return codegree_; }

    int exponent_of(int gen_index) const;
    bool contains(int gen_index) const { return exponent_of(gen_index) > 0; }

    int odd_count(const GeneratorSet& gens) const;
    int length() const;  // factor count with multiplicity

    std::string to_string(const GeneratorSet& gens) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Canonical monomial order: graded by codegree, then lexicographic
    // descending on the exponent vector read along the canonical generator
    // order, so that at equal codegree u^2 < u*v < v^2.
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<int, int>> factors_;
    int codegree_ = 0;
};

// Graded product of canonical monomials. Returns sign 0 if a shared odd
// generator kills the product, otherwise +/-1 Koszul sign from sorting the odd
// factors into canonical position.
struct MonomialProduct {
    int sign = 0;
    Monomial monomial;
};
MonomialProduct mul(const Monomial& a, const Monomial& b, const GeneratorSet& gens);

// Splits m = sign * g^k * rest with the Koszul sign of pulling every g factor
// to the front. k is m's exponent of g.
struct MonomialSplit {
    int sign = 1;
    int exponent = 0;
    Monomial rest;
};
MonomialSplit split_off(const Monomial& m, int gen_index, const GeneratorSet& gens);

}  // namespace sullivan
