#include "sullivan/moves.hpp"

#include <algorithm>

namespace sullivan {

namespace {

void require_valid(const SullivanAlgebra& a, const std::string& context) {
    ValidationReport rep = a.validate();
    if (!rep.ok()) {
        std::string msg = context + " produced an invalid algebra:";
        for (const std::string& p : rep.problems) msg += " " + p;
        throw StructuralError(msg);
    }
}

// Rebuilds an algebra from a subset of generators, rewriting differentials
// through a per-generator substitution hook on the old universe first.
SullivanAlgebra rebuild_without(const SullivanAlgebra& a, int removed_index,
                                const Poly* replacement_for_removed) {
    const GeneratorSet& old_gens = a.generators();
    std::vector<Generator> kept;
    for (int i = 0; i < old_gens.size(); ++i)
        if (i != removed_index) kept.push_back(old_gens.at(i));
    GeneratorSetPtr new_set = make_generators(kept);

    auto rebase = [&](const Poly& p) {
        Poly out = Poly::zero(new_set);
        for (const auto& [m, c] : p.terms()) {
            std::vector<std::pair<int, int>> factors;
            for (const auto& [idx, exp] : m.factors()) {
                if (idx == removed_index)
                    throw StructuralError("internal: removed generator still present");
                factors.emplace_back(new_set->require_index(old_gens.at(idx).name), exp);
            }
            std::sort(factors.begin(), factors.end());
            out.add_term(Monomial::from_sorted(std::move(factors), *new_set), c);
        }
        return out;
    };

    std::vector<Poly> diffs(static_cast<size_t>(new_set->size()), Poly::zero(new_set));
    for (int i = 0; i < old_gens.size(); ++i) {
        if (i == removed_index) continue;
        Poly dg = a.differential(i);
        if (replacement_for_removed && dg.mentions(removed_index))
            dg = dg.substitute(removed_index, *replacement_for_removed);
        if (dg.mentions(removed_index))
            throw PreconditionError("generator '" + old_gens.at(removed_index).name +
                                    "' still occurs in d(" + old_gens.at(i).name + ")");
        diffs[static_cast<size_t>(new_set->require_index(old_gens.at(i).name))] = rebase(dg);
    }
    return SullivanAlgebra(a.name(), new_set, std::move(diffs));
}

}  // namespace

SullivanAlgebra quotient_even_cocycle(const SullivanAlgebra& a, const std::string& gen) {
    int idx = a.generators().require_index(gen);
    const Generator& g = a.generators().at(idx);
    if (g.odd()) throw PreconditionError("quotient_even_cocycle: generator '" + gen + "' is odd");
    if (!a.differential(idx).is_zero())
        throw PreconditionError("quotient_even_cocycle: generator '" + gen + "' is not a cocycle");
    Poly zero = Poly::zero(a.generators_ptr());
    SullivanAlgebra out = rebuild_without(a, idx, &zero);
    require_valid(out, "quotient_even_cocycle");
    return out;
}

std::pair<SullivanAlgebra, std::string> adjoin_odd(const SullivanAlgebra& a, const Poly& f,
                                                   const std::string& name_hint) {
    const GeneratorSet& old_gens = a.generators();
    int codeg = 0;
    if (!f.is_zero()) {
        auto c = f.homogeneous_codegree();
        codeg = *c;
        if (codeg % 2 != 0) throw PreconditionError("adjoin_odd: cocycle has odd codegree");
        if (!a.d(f).is_zero()) throw PreconditionError("adjoin_odd: f is not a cocycle");
        for (const auto& [m, coeff] : f.terms())
            if (m.length() < 2)
                throw PreconditionError("adjoin_odd: f has a linear term; result would not be minimal");
    } else {
        codeg = 4;  // a free odd generator of codegree 3 (a sphere factor)
    }

    std::string base = name_hint.empty() ? ("w" + std::to_string(codeg - 1)) : name_hint;
    std::string name = base;
    for (char suffix = 'b'; old_gens.index_of(name) >= 0; ++suffix) name = base + suffix;

    std::vector<Generator> gens = old_gens.all();
    gens.push_back({name, codeg - 1});
    GeneratorSetPtr new_set = make_generators(gens);

    auto rebase = [&](const Poly& p) {
        Poly out = Poly::zero(new_set);
        for (const auto& [m, c] : p.terms()) {
            std::vector<std::pair<int, int>> factors;
            for (const auto& [idx, exp] : m.factors())
                factors.emplace_back(new_set->require_index(old_gens.at(idx).name), exp);
            std::sort(factors.begin(), factors.end());
            out.add_term(Monomial::from_sorted(std::move(factors), *new_set), c);
        }
        return out;
    };

    std::vector<Poly> diffs(static_cast<size_t>(new_set->size()), Poly::zero(new_set));
    for (int i = 0; i < old_gens.size(); ++i)
        diffs[static_cast<size_t>(new_set->require_index(old_gens.at(i).name))] = rebase(a.differential(i));
    diffs[static_cast<size_t>(new_set->require_index(name))] = rebase(f);

    SullivanAlgebra out(a.name(), new_set, std::move(diffs));
    require_valid(out, "adjoin_odd");
    return {std::move(out), name};
}

SullivanAlgebra drop_odd(const SullivanAlgebra& a, const std::string& gen) {
    int idx = a.generators().require_index(gen);
    if (a.generators().at(idx).even()) throw PreconditionError("drop_odd: generator '" + gen + "' is even");
    int witness = -1;
    if (a.mentioned_in_any_differential(idx, &witness))
        throw PreconditionError("drop_odd: generator '" + gen + "' occurs in d(" +
                                a.generators().at(witness).name + ")");
    SullivanAlgebra out = rebuild_without(a, idx, nullptr);
    require_valid(out, "drop_odd");
    return out;
}

namespace {

std::pair<SullivanAlgebra, IsoRecord> change_of_variables_impl(const SullivanAlgebra& a,
                                                               const std::string& gen, const Poly& g,
                                                               bool allow_occurrences) {
    int idx = a.generators().require_index(gen);
    const Generator& x = a.generators().at(idx);
    if (!g.is_zero()) {
        auto codeg = g.homogeneous_codegree();
        if (*codeg != x.codegree)
            throw DegreeError("change_of_variables: witness codegree " + std::to_string(*codeg) +
                              " differs from |" + gen + "| = " + std::to_string(x.codegree));
        for (const auto& [m, c] : g.terms())
            if (m.length() < 2)
                throw PreconditionError("change_of_variables: witness is not decomposable");
    }
    Poly x_plus_g = Poly::generator(a.generators_ptr(), idx) + g;
    if (!a.d(x_plus_g).is_zero())
        throw PreconditionError("change_of_variables: d(" + gen + " + g) != 0");

    int witness_gen = -1;
    bool occurs = a.mentioned_in_any_differential(idx, &witness_gen);
    if (occurs && !allow_occurrences)
        throw PreconditionError("change_of_variables: '" + gen + "' occurs in d(" +
                                a.generators().at(witness_gen).name + ")");

    // New basis keeps the name: the generator now denotes x' = x + g, so other
    // differentials substitute x -> x' - g and d(x') = 0.
    std::vector<Poly> diffs;
    diffs.reserve(static_cast<size_t>(a.generators().size()));
    Poly x_minus_g = Poly::generator(a.generators_ptr(), idx) - g;
    for (int i = 0; i < a.generators().size(); ++i) {
        if (i == idx) {
            diffs.push_back(Poly::zero(a.generators_ptr()));
        } else {
            Poly dg = a.differential(i);
            if (dg.mentions(idx)) dg = dg.substitute(idx, x_minus_g);
            diffs.push_back(std::move(dg));
        }
    }
    SullivanAlgebra out(a.name(), a.generators_ptr(), std::move(diffs));
    require_valid(out, "change_of_variables");
    return {std::move(out), IsoRecord{gen, g}};
}

}  // namespace

std::pair<SullivanAlgebra, IsoRecord> change_of_variables(const SullivanAlgebra& a,
                                                          const std::string& gen, const Poly& g) {
    return change_of_variables_impl(a, gen, g, false);
}

std::pair<SullivanAlgebra, IsoRecord> change_of_variables_general(const SullivanAlgebra& a,
                                                                  const std::string& gen,
                                                                  const Poly& g) {
    return change_of_variables_impl(a, gen, g, true);
}

SullivanAlgebra odd_sphere_rewrite(const SullivanAlgebra& alg, const std::string& x,
                                   const std::string& y) {
    const GeneratorSetPtr& gens = alg.generators_ptr();
    int xi = gens->require_index(x);
    int yi = gens->require_index(y);
    const Generator& gx = gens->at(xi);
    const Generator& gy = gens->at(yi);
    if (gx.odd() || gy.even()) throw PreconditionError("odd_sphere_rewrite: expected even x, odd y");
    if (gy.codegree != 2 * gx.codegree - 1)
        throw PreconditionError("odd_sphere_rewrite: |y| must be 2|x| - 1");

    // Split d(y) = x^2 + a*x + b with a, b free of x and y.
    Poly dy = alg.differential(yi);
    Poly a = Poly::zero(gens), b = Poly::zero(gens), x_sq = Poly::zero(gens);
    for (const auto& [m, c] : dy.terms()) {
        if (m.contains(yi)) throw PreconditionError("odd_sphere_rewrite: d(y) mentions y");
        MonomialSplit s = split_off(m, xi, *gens);
        Poly rest = Poly::term(gens, s.rest, c * s.sign);
        if (s.exponent == 0)
            b = b + rest;
        else if (s.exponent == 1)
            a = a + rest;
        else if (s.exponent == 2)
            x_sq = x_sq + rest;
        else
            throw PreconditionError("odd_sphere_rewrite: d(y) has x-degree > 2");
    }
    if (x_sq != Poly::unit(gens))
        throw PreconditionError("odd_sphere_rewrite: d(y) is not of the shape x^2 + a*x + b");
    if (a.mentions(xi) || a.mentions(yi) || b.mentions(xi) || b.mentions(yi))
        throw PreconditionError("odd_sphere_rewrite: a or b involves x or y");

    // x' = x + a/2; substituting x = x' - a/2 sends d(y) to x'^2 + (b - a^2/4)
    // and makes x' a cocycle (forced by d^2 = 0 on y).
    Poly half_a = a.scaled(Rat(1, 2));
    Poly x_repl = Poly::generator(gens, xi) - half_a;
    std::vector<Poly> diffs;
    diffs.reserve(static_cast<size_t>(gens->size()));
    for (int i = 0; i < gens->size(); ++i) {
        if (i == xi) {
            diffs.push_back(Poly::zero(gens));
        } else {
            Poly dgi = alg.differential(i);
            if (dgi.mentions(xi)) dgi = dgi.substitute(xi, x_repl);
            diffs.push_back(std::move(dgi));
        }
    }
    // Sanity: the old d(x) must satisfy d(x + a/2) = 0; otherwise the setup
    // violated d^2 = 0 and the shape error above is the honest report.
    Poly x_plus = Poly::generator(gens, xi) + half_a;
    if (!alg.d(x_plus).is_zero())
        throw PreconditionError("odd_sphere_rewrite: d(x + a/2) != 0; input is not a valid fibration model");

    SullivanAlgebra out(alg.name(), gens, std::move(diffs));
    require_valid(out, "odd_sphere_rewrite");
    return out;
}

}  // namespace sullivan
