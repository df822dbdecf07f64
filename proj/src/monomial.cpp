#include "sullivan/monomial.hpp"

#include <algorithm>

namespace sullivan {

Monomial Monomial::from_sorted(std::vector<std::pair<int, int>> factors, const GeneratorSet& gens) {
    Monomial m;
    int codeg = 0;
    int prev = -1;
    for (const auto& [idx, exp] : factors) {
        if (idx <= prev) throw StructuralError("monomial factors not strictly sorted");
        if (idx < 0 || idx >= gens.size()) throw StructuralError("monomial factor index out of range");
        if (exp <= 0) throw StructuralError("monomial exponent must be positive");
        if (gens.at(idx).odd() && exp > 1)
            throw StructuralError("odd generator '" + gens.at(idx).name + "' with exponent > 1");
        codeg += gens.at(idx).codegree * exp;
        prev = idx;
    }
    m.factors_ = std::move(factors);
    m.codegree_ = codeg;
    return m;
}

int Monomial::exponent_of(int gen_index) const {
    for (const auto& [idx, exp] : factors_)
        if (idx == gen_index) return exp;
    return 0;
}

int Monomial::odd_count(const GeneratorSet& gens) const {
    int n = 0;
    for (const auto& [idx, exp] : factors_)
        if (gens.at(idx).odd()) n += exp;
    return n;
}

int Monomial::length() const {
    int n = 0;
    for (const auto& [idx, exp] : factors_) n += exp;
    return n;
}

std::string Monomial::to_string(const GeneratorSet& gens) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [idx, exp] : factors_) {
        if (!out.empty()) out += "*";
        out += gens.at(idx).name;
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.codegree_ != b.codegree_) return a.codegree_ < b.codegree_;
    size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
        const auto& fa = a.factors_[i];
        const auto& fb = b.factors_[j];
        if (fa.first == fb.first) {
            if (fa.second != fb.second) return fa.second > fb.second;
            ++i, ++j;
        } else if (fa.first < fb.first) {
            return true;  // a has a positive exponent where b has zero
        } else {
            return false;
        }
    }
    // Same codegree and one is a prefix of the other; with equal codegree they
    // must then be equal, but keep a total order regardless.
    return i < a.factors_.size();
}

MonomialProduct mul(const Monomial& a, const Monomial& b, const GeneratorSet& gens) {
    // Koszul sign: for each odd factor of a, count odd factors of b that must
    // move past it to reach canonical position.
    long inversions = 0;
    {
        std::vector<int> a_odd, b_odd;
        for (const auto& [idx, exp] : a.factors())
            if (gens.at(idx).odd()) a_odd.push_back(idx);
        for (const auto& [idx, exp] : b.factors())
            if (gens.at(idx).odd()) b_odd.push_back(idx);
        for (int x : a_odd)
            for (int y : b_odd) {
                if (x == y) return {0, Monomial{}};
                if (y < x) ++inversions;
            }
    }
    std::vector<std::pair<int, int>> merged;
    size_t i = 0, j = 0;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
            merged.push_back(fa[i++]);
        } else if (i == fa.size() || fb[j].first < fa[i].first) {
            merged.push_back(fb[j++]);
        } else {
            merged.emplace_back(fa[i].first, fa[i].second + fb[j].second);
            ++i, ++j;
        }
    }
    MonomialProduct out;
    out.sign = (inversions % 2 == 0) ? 1 : -1;
    out.monomial = Monomial::from_sorted(std::move(merged), gens);
    return out;
}

MonomialSplit split_off(const Monomial& m, int gen_index, const GeneratorSet& gens) {
    MonomialSplit out;
    std::vector<std::pair<int, int>> rest;
    bool odd_target = gens.at(gen_index).odd();
    int odd_before = 0;
    for (const auto& [idx, exp] : m.factors()) {
        if (idx == gen_index) {
            out.exponent = exp;
            if (odd_target && odd_before % 2 != 0) out.sign = -1;
        } else {
            rest.emplace_back(idx, exp);
            if (gens.at(idx).odd() && idx < gen_index) odd_before += exp;
        }
    }
    out.rest = Monomial::from_sorted(std::move(rest), gens);
    return out;
}

}  // namespace sullivan
