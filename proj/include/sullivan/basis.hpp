#pragma once

#include <vector>

#include "sullivan/monomial.hpp"

namespace sullivan {

// All canonical monomials of codegree exactly n, in canonical monomial order.
// Codegree 0 yields exactly the unit monomial.
std::vector<Monomial> basis(const GeneratorSet& gens, int n);

// Monomials of codegree n with at least min_length factors (Lambda^{>=k} V).
std::vector<Monomial> basis_min_length(const GeneratorSet& gens, int n, int min_length);

// Coefficient at n is |basis(n)|, for n in [0, max_codegree].
std::vector<long> dimension_counts(const GeneratorSet& gens, int max_codegree);

}  // namespace sullivan
