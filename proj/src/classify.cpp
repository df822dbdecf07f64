#include "sullivan/classify.hpp"

#include <algorithm>
#include <map>

#include "sullivan/basis.hpp"
#include "sullivan/unravel.hpp"

namespace sullivan {

bool classify_regular(const SullivanAlgebra& a) {
    // V^odd empty forces d = 0: d raises codegree by 1 into odd total
    // codegree, which Lambda(V^even) does not contain.
    return a.odd_indices().empty();
}

namespace {

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

}  // namespace

SciResult sci_standard_form(const SullivanAlgebra& input) {
    {
        ValidationReport rep = input.validate();
        if (!rep.ok()) throw PreconditionError("sci_standard_form requires a valid minimal algebra");
    }
    SciCertificate cert;
    SullivanAlgebra current = input;
    while (current.generators().size() > 0) {
        int s = current.top_codegree();
        // Names at the top codegree, canonical order.
        std::vector<std::string> level;
        for (const Generator& g : current.generators().all())
            if (g.codegree == s) level.push_back(g.name);

        if (s % 2 != 0) {
            for (const std::string& name : level) {
                // Minimality forces top generators out of every differential:
                // a linear occurrence is excluded by Lambda^{>=2} and any
                // product with one exceeds codegree s+1.
                int witness = -1;
                if (current.mentioned_in_any_differential(current.generators().require_index(name), &witness))
                    throw PreconditionError("invalid input: top generator '" + name + "' occurs in d(" +
                                            current.generators().at(witness).name + ")");
                current = drop_odd(current, name);
                cert.steps.push_back({SciCertificate::Step::Kind::StripOdd, name, s, Poly()});
                cert.fibre.push_back(name);
            }
        } else {
            for (const std::string& name : level) {
                int idx = current.generators().require_index(name);
                Poly dx = current.differential(idx);
                if (dx.is_zero()) {
                    cert.steps.push_back({SciCertificate::Step::Kind::ChangeAndStripEven, name, s,
                                          Poly::zero(current.generators_ptr())});
                    cert.base.push_back(name);
                    current = quotient_even_cocycle(current, name);
                    continue;
                }
                // Hurewicz solve: dx in d((Lambda^{>=2} V)^s)?
                std::vector<Monomial> decomp = basis_min_length(current.generators(), s, 2);
                std::vector<Monomial> target = basis(current.generators(), s + 1);
                auto target_cols = column_index(target);
                RowSpan span(static_cast<int>(target.size()));
                std::vector<int> tags;
                for (size_t i = 0; i < decomp.size(); ++i) {
                    Poly dm = current.d(decomp[i]);
                    if (!dm.is_zero()) span.insert_tagged(to_vec(dm, target_cols), static_cast<int>(i));
                }
                SparseVec dxv = to_vec(dx, target_cols);
                SparseVec combo;
                SparseVec residual = span.reduce_tracked(dxv, combo);
                if (!residual.empty()) {
                    HurewiczObstruction obs;
                    obs.gen = name;
                    obs.codegree = s;
                    obs.differential = input.differential(name);
                    obs.refusal = span.refusal_functional(dxv);
                    // Express the functional over the input universe so it can
                    // be verified against the input directly. Every monomial
                    // involved lives on generators of codegree < s, shared by
                    // both universes.
                    for (const Monomial& m : target) {
                        std::vector<std::pair<int, int>> factors;
                        for (const auto& [idx, exp] : m.factors())
                            factors.emplace_back(
                                input.generators().require_index(current.generators().at(idx).name), exp);
                        std::sort(factors.begin(), factors.end());
                        obs.functional_basis.push_back(
                            Monomial::from_sorted(std::move(factors), input.generators()));
                    }
                    return obs;
                }
                // dx = -sum combo_i d(m_i): witness g = sum combo_i m_i gives
                // d(x + g) = 0.
                Poly g = Poly::zero(current.generators_ptr());
                for (const auto& [tag, c] : combo) g.add_term(decomp[static_cast<size_t>(tag)], c);
                auto [changed, iso] = change_of_variables(current, name, g);
                cert.steps.push_back({SciCertificate::Step::Kind::ChangeAndStripEven, name, s, g});
                cert.base.push_back(name);
                current = quotient_even_cocycle(changed, name);
            }
        }
    }
    cert.codimension = static_cast<int>(cert.fibre.size());
    return cert;
}

SullivanAlgebra replay_normal_form(const SullivanAlgebra& a, const SciCertificate& cert) {
    SullivanAlgebra out = a;
    for (const SciCertificate::Step& step : cert.steps) {
        if (step.kind != SciCertificate::Step::Kind::ChangeAndStripEven) continue;
        // Witness polynomials were produced over sub-universes; re-express
        // over the full algebra by name.
        Poly g = Poly::zero(out.generators_ptr());
        if (!step.witness.is_zero()) {
            const GeneratorSet& src = *step.witness.universe();
            for (const auto& [m, c] : step.witness.terms()) {
                std::vector<std::pair<int, int>> factors;
                for (const auto& [idx, exp] : m.factors())
                    factors.emplace_back(out.generators().require_index(src.at(idx).name), exp);
                std::sort(factors.begin(), factors.end());
                g.add_term(Monomial::from_sorted(std::move(factors), out.generators()), c);
            }
        }
        out = change_of_variables_general(out, step.gen, g).first;
    }
    return out;
}

bool verify_obstruction(const SullivanAlgebra& a, const HurewiczObstruction& obs) {
    int idx = a.generators().index_of(obs.gen);
    if (idx < 0) return false;
    // Functional coefficients keyed by monomial; outside its support it is 0.
    std::map<Monomial, Rat> lambda;
    for (const auto& [col, c] : obs.refusal)
        lambda[obs.functional_basis[static_cast<size_t>(col)]] = c;
    auto apply = [&](const Poly& p) {
        Rat out(0);
        for (const auto& [m, c] : p.terms()) {
            auto it = lambda.find(m);
            if (it != lambda.end()) out += it->second * c;
        }
        return out;
    };
    // The functional must annihilate d of every decomposable of codegree |x|
    // and be nonzero on dx.
    for (const Monomial& m : basis_min_length(a.generators(), obs.codegree, 2)) {
        Poly dm = a.d(m);
        if (!dm.is_zero() && apply(dm) != 0) return false;
    }
    return apply(a.differential(idx)) != 0;
}

long gorenstein_shift(const SullivanAlgebra& a, const SciCertificate& cert) {
    long shift = 0;
    for (const std::string& name : cert.base)
        shift += a.generators().at(a.generators().require_index(name)).codegree - 1;
    for (const std::string& name : cert.fibre)
        shift -= a.generators().at(a.generators().require_index(name)).codegree;
    return shift;
}

GciFragment gci_report(const SullivanAlgebra& a, const SciResult& sci, int max_loop_degree) {
    GciFragment out;
    GrowthReport growth = growth_degree(loop_homology_series(a, max_loop_degree));
    out.window_growth_degree = growth.conclusive ? growth.growth_degree : -2;
    if (std::holds_alternative<SciCertificate>(sci)) {
        out.gci = true;
        out.g_codimension = static_cast<int>(a.odd_indices().size());
        int expected = out.g_codimension - 1;
        if (growth.conclusive && growth.growth_degree != expected) {
            out.cross_check_ok = false;
            out.note = "loop growth " + std::to_string(growth.growth_degree) +
                       " disagrees with dim V^odd - 1 = " + std::to_string(expected);
        } else if (!growth.conclusive) {
            out.note = "loop growth inconclusive on the window: " + growth.note;
        }
    } else {
        out.gci = false;
        out.note = "not sci, so cohomology is not Noetherian and the growth condition fails";
    }
    return out;
}

Tri pd_check(const CohomologyTable& table, int formal_dim) {
    int n = formal_dim;
    if (n < 0 || n > table.max_codegree()) return Tri::Unknown;
    // Precondition: H vanishes above n within the window.
    for (int k = n + 1; k <= table.max_codegree(); ++k)
        if (table.dim(k) != 0) return Tri::Unknown;
    if (table.max_codegree() < n + 1) return Tri::Unknown;
    if (table.dim(n) != 1) return Tri::No;
    for (int k = 0; k <= n; ++k)
        if (table.dim(k) != table.dim(n - k)) return Tri::No;
    for (int k = 0; k <= n / 2; ++k) {
        int dk = table.dim(k);
        if (dk == 0) continue;
        // Pairing H^k x H^{n-k} -> H^n = Q; rank must be dk.
        SparseRationalMatrix pairing(dk, dk);
        const auto& left = table.representatives(k);
        const auto& right = table.representatives(n - k);
        for (int i = 0; i < dk; ++i)
            for (int j = 0; j < dk; ++j) {
                auto expr = table.reduce_class(left[static_cast<size_t>(i)] * right[static_cast<size_t>(j)]);
                if (!expr.coords.empty() && expr.coords[0] != 0)
                    pairing.set(i, j, expr.coords[0]);
            }
        if (pairing.rank() != dk) return Tri::No;
    }
    return Tri::Yes;
}

ClassificationReport classify(const SullivanAlgebra& a, int max_codegree, int max_loop_degree) {
    ClassificationReport rep;
    ValidationReport v = a.validate();
    rep.valid = v.ok();
    rep.minimal = v.minimal;
    rep.pure = v.pure;
    rep.even_cocycle_only = v.even_cocycle_only;
    rep.validation_problems = v.problems;
    if (!rep.valid) return rep;

    rep.regular = classify_regular(a);

    SciResult sci = sci_standard_form(a);
    if (std::holds_alternative<SciCertificate>(sci)) {
        rep.sci = true;
        rep.certificate = std::get<SciCertificate>(sci);
        rep.codimension = rep.certificate->codimension;
        rep.gorenstein_shift_value = gorenstein_shift(a, *rep.certificate);
        rep.noetherian = Tri::Yes;
        rep.eci = Tri::Yes;
        rep.bci = Tri::Yes;
        rep.qci = Tri::Yes;  // sci builds small bimodules by positive-degree maps
        rep.zci = rep.pure ? Tri::Yes : Tri::Unknown;
    } else {
        rep.sci = false;
        rep.obstruction = std::get<HurewiczObstruction>(sci);
        // Homotopy is finite dimensional by construction, so failing the
        // surjectivity test certifies H^* non-Noetherian and rules out gci.
        rep.noetherian = Tri::No;
        rep.eci = Tri::No;
        rep.bci = Tri::Unknown;
        rep.qci = Tri::Unknown;
        rep.zci = Tri::No;
    }

    GciFragment gci = gci_report(a, sci, max_loop_degree);
    rep.gci = gci.gci;
    rep.g_codimension = gci.g_codimension;
    rep.loop_growth_degree = gci.window_growth_degree;
    if (!gci.cross_check_ok)
        rep.warnings.push_back("loop growth cross-check mismatch: " + gci.note);
    else if (rep.sci && !gci.note.empty())
        rep.warnings.push_back(gci.note);

    CohomologyTable table = cohomology(a, max_codegree);
    int last_nonzero = 0;
    for (int n = 0; n <= max_codegree; ++n)
        if (table.dim(n) != 0) last_nonzero = n;
    rep.elliptic_heuristic = (max_codegree - last_nonzero) >= std::max(1, a.top_codegree());
    if (rep.elliptic_heuristic)
        rep.warnings.push_back("elliptic flag is heuristic: H vanishes in-window with margin >= top "
                               "generator codegree; truncation cannot certify vanishing");

    rep.nci_length_bound = nci_unravel(a).length_bound;
    return rep;
}

}  // namespace sullivan
