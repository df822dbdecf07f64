#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "sullivan/monomial.hpp"
#include "sullivan/rational.hpp"

namespace sullivan {

// Sparse exact-rational linear combination of canonical monomials. Immutable
// in spirit: every operation returns a fresh value. No zero coefficients are
// ever stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(GeneratorSetPtr gens) : gens_(std::move(gens)) {}

    static Poly zero(GeneratorSetPtr gens) { return Poly(std::move(gens)); }
    static Poly unit(GeneratorSetPtr gens);
    static Poly generator(GeneratorSetPtr gens, int index);
    static Poly term(GeneratorSetPtr gens, const Monomial& m, const Rat& c);

    const GeneratorSetPtr& universe() const { return gens_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Rat coefficient(const Monomial& m) const;

    // All terms share one codegree; the zero polynomial is homogeneous of any
    // codegree and reports nullopt.
    std::optional<int> homogeneous_codegree() const;
    bool is_homogeneous() const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator-() const;
    Poly operator*(const Poly& other) const;
    Poly scaled(const Rat& c) const;
    Poly pow(int k) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Rewrites every occurrence of the generator by the replacement, which
    // must be homogeneous of the generator's codegree.
    Poly substitute(int gen_index, const Poly& replacement) const;

    bool mentions(int gen_index) const;

    // Writes terms in canonical monomial order; parseable by the model-file
    // term grammar. The zero polynomial prints as "0".
    std::string to_string() const;

    void add_term(const Monomial& m, const Rat& c);  // builder; folds zeros away

private:
    void check_universe(const Poly& other) const;

    GeneratorSetPtr gens_;
    std::map<Monomial, Rat> terms_;
};

}  // namespace sullivan
