#include "sullivan/algebra.hpp"

#include <algorithm>

namespace sullivan {

SullivanAlgebra::SullivanAlgebra(std::string name, GeneratorSetPtr gens, std::vector<Poly> differentials)
    : name_(std::move(name)), gens_(std::move(gens)), diff_(std::move(differentials)) {
    if (!gens_) throw StructuralError("algebra requires a generator set");
    if (diff_.size() != static_cast<size_t>(gens_->size())) {
        diff_.resize(static_cast<size_t>(gens_->size()), Poly::zero(gens_));
    }
    for (int i = 0; i < gens_->size(); ++i) {
        Poly& dg = diff_[static_cast<size_t>(i)];
        if (!dg.universe()) dg = Poly::zero(gens_);
        if (dg.universe() != gens_ && *dg.universe() != *gens_)
            throw StructuralError("differential of '" + gens_->at(i).name + "' over a different universe");
        if (dg.is_zero()) continue;
        auto codeg = dg.homogeneous_codegree();  // throws DegreeError if inhomogeneous
        if (codeg && *codeg != gens_->at(i).codegree + 1)
            throw DegreeError("d(" + gens_->at(i).name + ") has codegree " + std::to_string(*codeg) +
                              ", expected " + std::to_string(gens_->at(i).codegree + 1));
    }
}

const Poly& SullivanAlgebra::differential(int gen_index) const {
    return diff_[static_cast<size_t>(gen_index)];
}

const Poly& SullivanAlgebra::differential(const std::string& gen_name) const {
    return differential(gens_->require_index(gen_name));
}

Poly SullivanAlgebra::d(const Monomial& m) const {
    Poly out = Poly::zero(gens_);
    // d(f1 f2 ... fs) = sum_i (-1)^{odd factors before i} f1..f_{i-1} d(f_i) f_{i+1}..fs,
    // collected per distinct generator (even exponents give the e*g^{e-1} rule).
    const auto& factors = m.factors();
    for (size_t i = 0; i < factors.size(); ++i) {
        auto [idx, exp] = factors[i];
        const Poly& dg = diff_[static_cast<size_t>(idx)];
        if (dg.is_zero()) continue;
        MonomialSplit s = split_off(m, idx, *gens_);
        Poly rest = Poly::term(gens_, s.rest, Rat(1));
        if (gens_->at(idx).odd()) {
            // m = sign * g * rest, d(g * rest) = d(g) * rest - g * d(rest); the
            // second summand is produced by the other factors' turns.
            out = out + (dg * rest).scaled(Rat(s.sign));
        } else {
            // m = g^e * rest: contribution e * g^{e-1} * d(g) * rest.
            Poly power = Poly::generator(gens_, idx).pow(exp - 1);
            out = out + (power * dg * rest).scaled(Rat(exp));
        }
    }
    return out;
}

Poly SullivanAlgebra::d(const Poly& p) const {
    if (p.universe() != gens_ && *p.universe() != *gens_)
        throw StructuralError("polynomial over a different universe");
    Poly out = Poly::zero(gens_);
    for (const auto& [m, c] : p.terms()) out = out + d(m).scaled(c);
    return out;
}

ValidationReport SullivanAlgebra::validate() const {
    ValidationReport rep;
    bool any_even_diff = false;
    bool odd_diff_in_even_subalgebra = true;
    for (int i = 0; i < gens_->size(); ++i) {
        const Generator& g = gens_->at(i);
        const Poly& dg = diff_[static_cast<size_t>(i)];
        if (!dg.is_zero()) {
            for (const auto& [m, c] : dg.terms()) {
                if (m.length() < 2) {
                    rep.minimal = false;
                    rep.problems.push_back("d(" + g.name + ") has the linear/constant term '" +
                                           m.to_string(*gens_) + "'");
                    break;
                }
            }
            if (!d(dg).is_zero()) {
                rep.valid = false;
                rep.problems.push_back("d^2 != 0 at generator '" + g.name + "'");
            }
            if (g.even()) any_even_diff = true;
            if (g.odd()) {
                for (const auto& [m, c] : dg.terms()) {
                    if (m.odd_count(*gens_) > 0) {
                        odd_diff_in_even_subalgebra = false;
                        break;
                    }
                }
            }
        }
    }
    rep.even_cocycle_only = !any_even_diff;
    rep.pure = rep.even_cocycle_only && odd_diff_in_even_subalgebra;
    return rep;
}

std::vector<int> SullivanAlgebra::even_indices() const {
    std::vector<int> out;
    for (int i = 0; i < gens_->size(); ++i)
        if (gens_->at(i).even()) out.push_back(i);
    return out;
}

std::vector<int> SullivanAlgebra::odd_indices() const {
    std::vector<int> out;
    for (int i = 0; i < gens_->size(); ++i)
        if (gens_->at(i).odd()) out.push_back(i);
    return out;
}

int SullivanAlgebra::top_codegree() const {
    int top = 0;
    for (const Generator& g : gens_->all()) top = std::max(top, g.codegree);
    return top;
}

bool SullivanAlgebra::mentioned_in_any_differential(int gen_index, int* witness) const {
    for (int i = 0; i < gens_->size(); ++i) {
        if (i == gen_index) continue;
        if (diff_[static_cast<size_t>(i)].mentions(gen_index)) {
            if (witness) *witness = i;
            return true;
        }
    }
    return false;
}

bool operator==(const SullivanAlgebra& a, const SullivanAlgebra& b) {
    if (*a.gens_ != *b.gens_) return false;
    for (size_t i = 0; i < a.diff_.size(); ++i)
        if (a.diff_[i] != b.diff_[i]) return false;
    return true;
}

AlgebraBuilder& AlgebraBuilder::gen(const std::string& name, int codegree) {
    if (set_) throw StructuralError("generators are fixed once the universe is built");
    gens_.push_back({name, codegree});
    return *this;
}

GeneratorSetPtr AlgebraBuilder::universe() {
    if (!set_) {
        set_ = make_generators(gens_);
        diff_.assign(static_cast<size_t>(set_->size()), Poly::zero(set_));
    }
    return set_;
}

AlgebraBuilder& AlgebraBuilder::d(const std::string& gen_name, const Poly& value) {
    universe();
    diff_[static_cast<size_t>(set_->require_index(gen_name))] = value;
    return *this;
}

SullivanAlgebra AlgebraBuilder::build() {
    universe();
    return SullivanAlgebra(name_, set_, diff_);
}

}  // namespace sullivan
