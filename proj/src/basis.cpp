#include "sullivan/basis.hpp"

#include <algorithm>

namespace sullivan {

namespace {

void enumerate(const GeneratorSet& gens, int gen_index, int remaining,
               std::vector<std::pair<int, int>>& stack, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(Monomial::from_sorted(stack, gens));
        return;
    }
    if (gen_index >= gens.size()) return;
    const Generator& g = gens.at(gen_index);
    int max_exp = g.odd() ? 1 : remaining / g.codegree;
    for (int e = max_exp; e >= 0; --e) {
        if (e * g.codegree > remaining) continue;
        if (e > 0) stack.emplace_back(gen_index, e);
        enumerate(gens, gen_index + 1, remaining - e * g.codegree, stack, out);
        if (e > 0) stack.pop_back();
    }
}

}  // namespace

std::vector<Monomial> basis(const GeneratorSet& gens, int n) {
    if (n < 0) throw RangeError("basis codegree must be >= 0");
    std::vector<Monomial> out;
    std::vector<std::pair<int, int>> stack;
    enumerate(gens, 0, n, stack, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> basis_min_length(const GeneratorSet& gens, int n, int min_length) {
    std::vector<Monomial> out = basis(gens, n);
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const Monomial& m) { return m.length() < min_length; }),
              out.end());
    return out;
}

std::vector<long> dimension_counts(const GeneratorSet& gens, int max_codegree) {
    if (max_codegree < 0) throw RangeError("max codegree must be >= 0");
    std::vector<long> out(static_cast<size_t>(max_codegree) + 1, 0);
    // Expand prod over even g of (1-t^{|g|})^{-1} times prod over odd g of
    // (1+t^{|g|}) coefficientwise; cheaper than enumerating monomials.
    out[0] = 1;
    for (const Generator& g : gens.all()) {
        std::vector<long> next(out.size(), 0);
        if (g.odd()) {
            for (size_t n = 0; n < out.size(); ++n) {
                next[n] = out[n];
                if (n >= static_cast<size_t>(g.codegree)) next[n] += out[n - g.codegree];
            }
        } else {
            for (size_t n = 0; n < out.size(); ++n) {
                next[n] = out[n];
                if (n >= static_cast<size_t>(g.codegree)) next[n] += next[n - g.codegree];
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace sullivan
