#pragma once

#include <string>
#include <vector>

#include "sullivan/poly.hpp"

namespace sullivan {

struct ValidationReport {
    bool valid = true;             // d homogeneous of codegree |g|+1 and d^2 = 0
    bool minimal = true;           // every d(g) lies in Lambda^{>=2} V
    bool simply_connected = true;  // enforced at construction; reported for completeness
    bool pure = false;             // d(V^even) = 0 and d(V^odd) in Lambda(V^even)
    bool even_cocycle_only = false;  // d(V^even) = 0 (the sci normal form)
    std::vector<std::string> problems;

    bool ok() const { return valid && minimal && simply_connected; }
};

// A minimal Sullivan algebra: a finite canonical generator list with a
// differential assignment per generator (absent = zero). Values are immutable
// after construction; the model-level moves return new algebras.
class SullivanAlgebra {
public:
    // Differentials indexed like the generator set; each must be over the same
    // universe and homogeneous of codegree |g|+1 (or zero). Structural
    // violations throw; mathematical ones (d^2, minimality) are reported by
    // validate().
    SullivanAlgebra(std::string name, GeneratorSetPtr gens, std::vector<Poly> differentials);

    const std::string& name() const { return name_; }
    const GeneratorSet& generators() const { return *gens_; }
    const GeneratorSetPtr& generators_ptr() const { return gens_; }
    const Poly& differential(int gen_index) const;
    const Poly& differential(const std::string& gen_name) const;

    // Leibniz extension of d: d(ab) = d(a)b + (-1)^{|a|} a d(b), d(1) = 0.
    Poly d(const Poly& p) const;
    Poly d(const Monomial& m) const;

    ValidationReport validate() const;

    std::vector<int> even_indices() const;
    std::vector<int> odd_indices() const;
    int top_codegree() const;  // 0 for the trivial algebra
    bool mentioned_in_any_differential(int gen_index, int* witness = nullptr) const;

    friend bool operator==(const SullivanAlgebra& a, const SullivanAlgebra& b);
    friend bool operator!=(const SullivanAlgebra& a, const SullivanAlgebra& b) { return !(a == b); }

private:
    std::string name_;
    GeneratorSetPtr gens_;
    std::vector<Poly> diff_;
};

// Convenience builder used by tests and the moves: generators by (name,
// codegree) plus differentials given as polynomials over the resulting set.
class AlgebraBuilder {
public:
    explicit AlgebraBuilder(std::string name) : name_(std::move(name)) {}
    AlgebraBuilder& gen(const std::string& name, int codegree);
    // Finish generator declarations; after this, universe() is available and
    // differentials may be assigned.
    GeneratorSetPtr universe();
    AlgebraBuilder& d(const std::string& gen_name, const Poly& value);
    SullivanAlgebra build();

private:
    std::string name_;
    std::vector<Generator> gens_;
    GeneratorSetPtr set_;
    std::vector<Poly> diff_;
};

}  // namespace sullivan
