#pragma once

#include <string>
#include <utility>

#include "sullivan/algebra.hpp"

namespace sullivan {

// Model-level rewriting moves. Every move returns a fresh algebra (inputs are
// never mutated) and validates its result.

// Removes an even cocycle generator; differentials are rewritten by
// substituting the generator by zero (the ideal is differential since dx = 0).
SullivanAlgebra quotient_even_cocycle(const SullivanAlgebra& a, const std::string& gen);

// Adjoins a new odd generator y of codegree |f|-1 with d(y) = f, for an even
// cocycle f; original differentials unchanged. f with linear terms would break
// minimality of the result and is rejected. Returns the new algebra and the
// adjoined generator's name.
std::pair<SullivanAlgebra, std::string> adjoin_odd(const SullivanAlgebra& a, const Poly& f,
                                                   const std::string& name_hint = "");

// Removes a top odd generator that occurs in no other differential; the
// subalgebra on the rest with the restricted differential.
SullivanAlgebra drop_odd(const SullivanAlgebra& a, const std::string& gen);

// Replaces x by the cocycle x' = x + g (name kept); requires g decomposable,
// homogeneous of codegree |x|, d(x+g) = 0 and x absent from every other
// differential, which makes the move exactly invertible.
struct IsoRecord {
    std::string gen;
    Poly witness;  // x maps to x + witness
};
std::pair<SullivanAlgebra, IsoRecord> change_of_variables(const SullivanAlgebra& a,
                                                          const std::string& gen, const Poly& g);

// General form of the same isomorphism: x' = x + g with d(x+g) = 0, but x may
// occur in other differentials, which are rewritten by substituting
// x -> x - g. Used where the restricted move's absence precondition is not
// available (general unravelling inputs).
std::pair<SullivanAlgebra, IsoRecord> change_of_variables_general(const SullivanAlgebra& a,
                                                                  const std::string& gen,
                                                                  const Poly& g);

// Even-sphere rewrite: for an even generator x of codegree 2m and an odd y of
// codegree 4m-1 with d(y) = x^2 + a*x + b (a, b free of x and y), changes
// basis to x' = x + a/2 so that d(x') = 0 and d(y) = x'^2 + (b - a^2/4).
SullivanAlgebra odd_sphere_rewrite(const SullivanAlgebra& alg, const std::string& x,
                                   const std::string& y);

}  // namespace sullivan
