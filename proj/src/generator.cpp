#include "sullivan/generator.hpp"

#include <algorithm>
#include <set>

namespace sullivan {

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::sort(gens_.begin(), gens_.end(), canonical_less);
    std::set<std::string> seen;
    for (size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        if (g.codegree < 2)
            throw StructuralError("generator '" + g.name + "' has codegree " +
                                  std::to_string(g.codegree) + "; simply connected input requires >= 2");
        if (!seen.insert(g.name).second)
            throw StructuralError("duplicate generator name '" + g.name + "'");
        index_[g.name] = static_cast<int>(i);
    }
}

int GeneratorSet::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int GeneratorSet::require_index(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) throw StructuralError("unknown generator '" + name + "'");
    return i;
}

GeneratorSetPtr make_generators(std::vector<Generator> gens) {
    return std::make_shared<const GeneratorSet>(std::move(gens));
}

}  // namespace sullivan
