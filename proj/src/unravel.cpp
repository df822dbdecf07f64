#include "sullivan/unravel.hpp"

#include <algorithm>
#include <map>

#include "sullivan/basis.hpp"

namespace sullivan {

namespace {

Poly rebase_poly(const Poly& p, const SullivanAlgebra& target) {
    Poly out = Poly::zero(target.generators_ptr());
    if (p.is_zero()) return out;
    const GeneratorSet& src = *p.universe();
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::pair<int, int>> factors;
        for (const auto& [idx, exp] : m.factors())
            factors.emplace_back(target.generators().require_index(src.at(idx).name), exp);
        std::sort(factors.begin(), factors.end());
        out.add_term(Monomial::from_sorted(std::move(factors), target.generators()), c);
    }
    return out;
}

std::map<Monomial, int> column_index(const std::vector<Monomial>& basis) {
    std::map<Monomial, int> idx;
    for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
    return idx;
}

SparseVec to_vec(const Poly& p, const std::map<Monomial, int>& columns) {
    SparseVec out;
    for (const auto& [m, c] : p.terms()) out.emplace_back(columns.at(m), c);
    std::sort(out.begin(), out.end(),
              [](const std::pair<int, Rat>& x, const std::pair<int, Rat>& y) { return x.first < y.first; });
    return out;
}

// Monomials of codegree n over generators of codegree < top only.
std::vector<Monomial> below_basis(const GeneratorSet& gens, int n, int top) {
    std::vector<Monomial> out;
    for (const Monomial& m : basis(gens, n)) {
        bool ok = true;
        for (const auto& [idx, exp] : m.factors())
            if (gens.at(idx).codegree >= top) {
                ok = false;
                break;
            }
        if (ok) out.push_back(m);
    }
    return out;
}

// Attempted solve of d(u) = d(a) over the codegree-s monomials on generators
// below s. Returns the witness u on success, or the reduced residual.
struct SolveOutcome {
    bool solved = false;
    Poly witness;   // u with d(u) = d(a)
    Poly residual;  // d(a) reduced against the image span
};

SolveOutcome solve_da(const SullivanAlgebra& alg, int a_index) {
    const Poly& da = alg.differential(a_index);
    int s = alg.generators().at(a_index).codegree;
    std::vector<Monomial> source = below_basis(alg.generators(), s, s);
    std::vector<Monomial> target = below_basis(alg.generators(), s + 1, s);
    auto cols = column_index(target);
    RowSpan span(static_cast<int>(target.size()));
    for (size_t i = 0; i < source.size(); ++i) {
        Poly dm = alg.d(source[i]);
        if (!dm.is_zero()) span.insert_tagged(to_vec(dm, cols), static_cast<int>(i));
    }
    SparseVec combo;
    SparseVec residual = span.reduce_tracked(to_vec(da, cols), combo);
    SolveOutcome out;
    if (residual.empty()) {
        out.solved = true;
        // da = -sum combo_i d(m_i), so u = -sum combo_i m_i.
        out.witness = Poly::zero(alg.generators_ptr());
        for (const auto& [tag, c] : combo) out.witness.add_term(source[static_cast<size_t>(tag)], -c);
    } else {
        out.residual = Poly::zero(alg.generators_ptr());
        for (const auto& [col, c] : residual) out.residual.add_term(target[static_cast<size_t>(col)], c);
    }
    return out;
}

// Even complementary factors of the residual's monomials: delete one odd
// factor from each, keep the non-coboundary cocycles.
std::vector<Monomial> kill_candidates(const SullivanAlgebra& alg, const Poly& residual) {
    std::vector<Monomial> out;
    for (const auto& [m, c] : residual.terms()) {
        for (const auto& [idx, exp] : m.factors()) {
            if (!alg.generators().at(idx).odd()) continue;
            MonomialSplit s = split_off(m, idx, alg.generators());
            const Monomial& cand = s.rest;
            if (cand.is_unit()) continue;
            if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
            Poly cp = Poly::term(alg.generators_ptr(), cand, Rat(1));
            if (!alg.d(cp).is_zero()) continue;
            if (is_coboundary(alg, cp).is_coboundary()) continue;
            out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Restriction to the generators of codegree < top (closed under d there).
SullivanAlgebra restrict_below(const SullivanAlgebra& alg, int top) {
    std::vector<Generator> kept;
    for (const Generator& g : alg.generators().all())
        if (g.codegree < top) kept.push_back(g);
    GeneratorSetPtr sub = make_generators(kept);
    SullivanAlgebra shell(alg.name() + "|<" + std::to_string(top), sub, {});
    std::vector<Poly> diffs(static_cast<size_t>(sub->size()), Poly::zero(sub));
    for (const Generator& g : kept)
        diffs[static_cast<size_t>(sub->require_index(g.name))] = rebase_poly(alg.differential(g.name), shell);
    return SullivanAlgebra(alg.name() + "|<" + std::to_string(top), sub, std::move(diffs));
}

}  // namespace

std::pair<std::vector<NciMove>, SullivanAlgebra> eliminate_minimal_even(const SullivanAlgebra& input) {
    std::vector<int> evens = input.even_indices();
    if (evens.empty()) throw PreconditionError("eliminate_minimal_even: no even generators");
    SullivanAlgebra current = input;
    std::string a_name = input.generators().at(evens.front()).name;
    std::vector<NciMove> moves;
    if (input.differential(evens.front()).is_zero()) return {moves, current};

    auto adjoin_kill = [&](const Poly& cocycle) {
        auto [next, name] = adjoin_odd(current, cocycle);
        NciMove mv;
        mv.kind = NciMove::Kind::AdjoinOdd;
        mv.gen = name;
        mv.codegree = *cocycle.homogeneous_codegree() - 1;
        mv.payload = cocycle;
        moves.push_back(std::move(mv));
        current = std::move(next);
    };

    while (true) {
        int a_index = current.generators().require_index(a_name);
        SolveOutcome outcome = solve_da(current, a_index);
        if (outcome.solved) {
            Poly g = -outcome.witness;  // d(a + g) = d(a) - d(u) = 0
            auto [changed, iso] = change_of_variables_general(current, a_name, g);
            NciMove mv;
            mv.kind = NciMove::Kind::ChangeOfVariables;
            mv.gen = a_name;
            mv.codegree = current.generators().at(a_index).codegree;
            mv.payload = g;
            moves.push_back(std::move(mv));
            return {moves, changed};
        }

        size_t residual_count = outcome.residual.term_count();
        std::vector<Monomial> candidates = kill_candidates(current, outcome.residual);
        bool advanced = false;
        if (!candidates.empty()) {
            // One-step lookahead: tentatively adjoin, re-solve, count residual
            // terms; minimal residual wins, ties to the canonical order (the
            // candidate list is already sorted).
            size_t best_count = residual_count;
            const Monomial* best = nullptr;
            for (const Monomial& cand : candidates) {
                Poly cp = Poly::term(current.generators_ptr(), cand, Rat(1));
                auto [trial, tmp_name] = adjoin_odd(current, cp);
                SolveOutcome look = solve_da(trial, trial.generators().require_index(a_name));
                size_t count = look.solved ? 0 : look.residual.term_count();
                if (count < best_count) {
                    best_count = count;
                    best = &cand;
                }
            }
            if (best) {
                adjoin_kill(Poly::term(current.generators_ptr(), *best, Rat(1)));
                advanced = true;
            }
        }
        if (!advanced) {
            // Exhaustive bottom-up kill: remove all even cohomology of the
            // below-|a| odd subalgebra in codegrees <= |a|; termination is
            // guaranteed since each kill lowers one dimension and creates
            // nothing below it.
            int s = current.generators().at(current.generators().require_index(a_name)).codegree;
            bool killed = false;
            for (int c = 2; c <= s && !killed; c += 2) {
                SullivanAlgebra sub = restrict_below(current, s);
                CohomologyTable sub_table = cohomology(sub, c);
                if (sub_table.dim(c) == 0) continue;
                Poly rep = rebase_poly(sub_table.representatives(c).front(), current);
                adjoin_kill(rep);
                killed = true;
            }
            if (!killed)
                throw StructuralError("eliminate_minimal_even: no obstructing class found but the "
                                      "solve failed; input is not a valid minimal algebra");
        }
    }
}

NciCertificate nci_unravel(const SullivanAlgebra& input) {
    {
        ValidationReport rep = input.validate();
        if (!rep.ok()) throw PreconditionError("nci_unravel requires a valid minimal algebra");
    }
    NciCertificate cert;
    SullivanAlgebra current = input;
    while (true) {
        SciResult sci = sci_standard_form(current);
        if (std::holds_alternative<SciCertificate>(sci)) {
            cert.final_sci = std::get<SciCertificate>(sci);
            cert.final_codimension = cert.final_sci->codimension;
            cert.final_snapshot = current;
            for (const NciMove& mv : cert.moves) {
                if (mv.kind == NciMove::Kind::AdjoinOdd) ++cert.adjoin_count;
                if (mv.kind == NciMove::Kind::QuotientEven) ++cert.quotient_count;
            }
            cert.length_bound = cert.adjoin_count + cert.quotient_count + cert.final_codimension;
            return cert;
        }
        std::vector<int> evens = current.even_indices();
        if (evens.empty())
            throw StructuralError("nci_unravel: sci test failed with no even generators");
        int a_index = evens.front();
        if (current.differential(a_index).is_zero()) {
            // The minimal even generator is already a cocycle yet the algebra
            // is not sci: quotient it and recurse (one quotient per turn).
            std::string name = current.generators().at(a_index).name;
            NciMove mv;
            mv.kind = NciMove::Kind::QuotientEven;
            mv.gen = name;
            mv.codegree = current.generators().at(a_index).codegree;
            cert.moves.push_back(std::move(mv));
            current = quotient_even_cocycle(current, name);
        } else {
            auto [moves, next] = eliminate_minimal_even(current);
            for (NciMove& mv : moves) cert.moves.push_back(std::move(mv));
            current = std::move(next);
        }
    }
}

SullivanAlgebra apply_move(const SullivanAlgebra& a, const NciMove& move) {
    switch (move.kind) {
        case NciMove::Kind::AdjoinOdd: {
            Poly f = rebase_poly(move.payload, a);
            auto [next, name] = adjoin_odd(a, f, move.gen);
            if (name != move.gen)
                throw PreconditionError("adjoin-odd replay produced generator '" + name +
                                        "', certificate names '" + move.gen + "'");
            return next;
        }
        case NciMove::Kind::QuotientEven:
            return quotient_even_cocycle(a, move.gen);
        case NciMove::Kind::DropOdd:
            return drop_odd(a, move.gen);
        case NciMove::Kind::ChangeOfVariables: {
            Poly g = rebase_poly(move.payload, a);
            return change_of_variables_general(a, move.gen, g).first;
        }
    }
    throw StructuralError("unknown move kind");
}

VerifyResult verify_certificate(const SullivanAlgebra& input, const NciCertificate& cert) {
    VerifyResult out;
    SullivanAlgebra current = input;
    for (size_t k = 0; k < cert.moves.size(); ++k) {
        try {
            current = apply_move(current, cert.moves[k]);
        } catch (const Error& e) {
            out.failed_step = static_cast<int>(k);
            out.failure = e.what();
            return out;
        }
        if (!current.validate().ok()) {
            out.failed_step = static_cast<int>(k);
            out.failure = "move produced an invalid algebra";
            return out;
        }
    }
    if (cert.final_snapshot && !(current == *cert.final_snapshot)) {
        out.failure = "final snapshot differs from the replayed algebra";
        return out;
    }
    SciResult sci = sci_standard_form(current);
    if (!std::holds_alternative<SciCertificate>(sci)) {
        out.failure = "replayed algebra does not pass the sci standard form";
        return out;
    }
    const SciCertificate& final_sci = std::get<SciCertificate>(sci);
    if (final_sci.codimension != cert.final_codimension) {
        out.failure = "final codimension mismatch";
        return out;
    }
    int adjoins = 0, quotients = 0;
    for (const NciMove& mv : cert.moves) {
        if (mv.kind == NciMove::Kind::AdjoinOdd) ++adjoins;
        if (mv.kind == NciMove::Kind::QuotientEven) ++quotients;
    }
    if (cert.adjoin_count != adjoins || cert.quotient_count != quotients ||
        cert.length_bound != adjoins + quotients + cert.final_codimension) {
        out.failure = "length accounting mismatch";
        return out;
    }
    out.ok = true;
    return out;
}

}  // namespace sullivan
