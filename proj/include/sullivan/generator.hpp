#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sullivan/errors.hpp"

namespace sullivan {

// Upper-graded generator of a free CGA. Codegree 1 is rejected: inputs are
// simply connected. Parity is derived from the codegree.
struct Generator {
    std::string name;
    int codegree = 0;

    bool odd() const { return codegree % 2 != 0; }
    bool even() const { return codegree % 2 == 0; }

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.name == b.name && a.codegree == b.codegree;
    }
};

// Canonical generator order: (codegree, name) lexicographic. All signs and
// tie-breaks in the library are defined against this order.
inline bool canonical_less(const Generator& a, const Generator& b) {
    if (a.codegree != b.codegree) return a.codegree < b.codegree;
    return a.name < b.name;
}

// Immutable generator universe shared by monomials and polynomials.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<Generator> gens);

    int size() const { return static_cast<int>(gens_.size()); }
    const Generator& at(int i) const { return gens_[static_cast<size_t>(i)]; }
    const std::vector<Generator>& all() const { return gens_; }

    int index_of(const std::string& name) const;     // -1 if absent
    int require_index(const std::string& name) const;  // throws StructuralError

    bool operator==(const GeneratorSet& other) const { return gens_ == other.gens_; }
    bool operator!=(const GeneratorSet& other) const { return !(*this == other); }

private:
    std::vector<Generator> gens_;  // sorted canonically
    std::map<std::string, int> index_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

GeneratorSetPtr make_generators(std::vector<Generator> gens);

}  // namespace sullivan
