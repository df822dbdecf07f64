#include "sullivan/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "sullivan/basis.hpp"

namespace sullivan {

namespace {

using ColumnIndex = std::map<Monomial, int>;

ColumnIndex index_basis(const std::vector<Monomial>& basis) {
    ColumnIndex idx;
    for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
    return idx;
}

SparseVec poly_to_vec(const Poly& p, const ColumnIndex& columns) {
    SparseVec out;
    for (const auto& [m, c] : p.terms()) {
        auto it = columns.find(m);
        if (it == columns.end()) throw StructuralError("monomial outside the expected basis");
        out.emplace_back(it->second, c);
    }
    std::sort(out.begin(), out.end(),
              [](const std::pair<int, Rat>& a, const std::pair<int, Rat>& b) { return a.first < b.first; });
    return out;
}

Poly vec_to_poly(const SparseVec& v, const std::vector<Monomial>& basis, const GeneratorSetPtr& gens) {
    Poly out = Poly::zero(gens);
    for (const auto& [col, c] : v) out.add_term(basis[static_cast<size_t>(col)], c);
    return out;
}

}  // namespace

const CohomologyTable::Level& CohomologyTable::level(int n) const {
    if (n < 0 || n > max_codegree_) throw RangeError("codegree outside the computed window");
    return (*levels_)[static_cast<size_t>(n)];
}

int CohomologyTable::dim(int n) const { return level(n).dim; }
long CohomologyTable::rank_d(int n) const {
    if (n < 0 || n > max_codegree_) return 0;
    return level(n).rank_d;
}
const std::vector<Poly>& CohomologyTable::representatives(int n) const { return level(n).reps; }

CohomologyTable::ClassExpr CohomologyTable::reduce_class(const Poly& cocycle) const {
    auto codeg = cocycle.homogeneous_codegree();
    if (!codeg) return {cocycle, {}};  // zero polynomial: the zero class
    const Level& lv = level(*codeg);
    ColumnIndex columns = index_basis(lv.basis);
    SparseVec v = poly_to_vec(cocycle, columns);
    SparseVec reduced = lv.boundaries.reduce(v);
    SparseVec combo;
    SparseVec residual = lv.rep_span.reduce_tracked(reduced, combo);
    if (!residual.empty())
        throw StructuralError("class reduction left a residual; input was not a cocycle");
    ClassExpr out;
    out.reduced = vec_to_poly(reduced, lv.basis, gens_);
    out.coords.assign(lv.reps.size(), Rat(0));
    // reduced = -sum combo_t * rep_t (reps are the tagged originals).
    for (const auto& [tag, c] : combo) out.coords[static_cast<size_t>(tag)] = -c;
    return out;
}

CohomologyTable cohomology(const SullivanAlgebra& algebra, int max_codegree) {
    if (max_codegree < 0) throw RangeError("max codegree must be >= 0");
    const GeneratorSetPtr& gens = algebra.generators_ptr();

    std::vector<std::vector<Monomial>> bases(static_cast<size_t>(max_codegree) + 2);
    for (int n = 0; n <= max_codegree + 1; ++n) bases[static_cast<size_t>(n)] = basis(*gens, n);

    auto levels = std::make_shared<std::vector<CohomologyTable::Level>>(
        static_cast<size_t>(max_codegree) + 1);

    // Per-codegree jobs are independent; fan out and join before assembly.
    auto run_level = [&](int n) {
        CohomologyTable::Level lv;
        lv.basis = bases[static_cast<size_t>(n)];
        const std::vector<Monomial>& target = bases[static_cast<size_t>(n) + 1];
        ColumnIndex target_cols = index_basis(target);
        ColumnIndex cols = index_basis(lv.basis);

        // Boundary span at n: images of the previous level.
        lv.boundaries = RowSpan(static_cast<int>(lv.basis.size()));
        if (n >= 1) {
            for (const Monomial& m : bases[static_cast<size_t>(n) - 1]) {
                Poly dm = algebra.d(m);
                if (!dm.is_zero()) lv.boundaries.insert(poly_to_vec(dm, cols));
            }
        }

        // Rank of d_n by fraction-free elimination, kernel by reduction; the
        // two routes must agree (rank + nullity = column count).
        SparseRationalMatrix mat(static_cast<int>(target.size()), static_cast<int>(lv.basis.size()));
        for (size_t c = 0; c < lv.basis.size(); ++c) {
            Poly dm = algebra.d(lv.basis[c]);
            for (const auto& [mono, coeff] : dm.terms()) mat.set(target_cols.at(mono), static_cast<int>(c), coeff);
        }
        std::vector<SparseVec> kernel = kernel_basis(mat);
        lv.rank_d = mat.rank();
        if (lv.rank_d + static_cast<long>(kernel.size()) != static_cast<long>(lv.basis.size()))
            throw StructuralError("rank/nullity disagreement at codegree " + std::to_string(n));

        lv.rep_span = RowSpan(static_cast<int>(lv.basis.size()));
        for (const SparseVec& z : kernel) {
            SparseVec reduced = lv.boundaries.reduce(z);
            if (reduced.empty()) continue;
            int tag = static_cast<int>(lv.reps.size());
            SparseVec before = lv.rep_span.reduce(reduced);
            if (before.empty()) continue;
            // Insert the fully reduced, monic residual and record it as the
            // representative so outputs are reproducible.
            Rat lead = before.front().second;
            for (auto& [c, v] : before) {
                v /= lead;
                v.canonicalize();
            }
            lv.rep_span.insert_tagged(before, tag);
            lv.reps.push_back(vec_to_poly(before, lv.basis, gens));
        }
        lv.dim = static_cast<int>(lv.reps.size());
        return lv;
    };

    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(max_codegree) + 1);
    if (workers <= 1) {
        for (int n = 0; n <= max_codegree; ++n) (*levels)[static_cast<size_t>(n)] = run_level(n);
    } else {
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    while (true) {
                        int n = next.fetch_add(1);
                        if (n > max_codegree) break;
                        (*levels)[static_cast<size_t>(n)] = run_level(n);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // Rank/nullity bookkeeping: dim H^n = dim C^n - rank d_n - rank d_{n-1}.
    for (int n = 0; n <= max_codegree; ++n) {
        const CohomologyTable::Level& lv = (*levels)[static_cast<size_t>(n)];
        long prev_rank = n == 0 ? 0 : (*levels)[static_cast<size_t>(n) - 1].rank_d;
        long expected = static_cast<long>(lv.basis.size()) - lv.rank_d - prev_rank;
        if (expected != lv.dim)
            throw StructuralError("rank bookkeeping failed at codegree " + std::to_string(n) +
                                  " (is the input a valid Sullivan algebra?)");
    }

    CohomologyTable table;
    table.max_codegree_ = max_codegree;
    table.gens_ = gens;
    table.levels_ = levels;
    return table;
}

CoboundaryResult is_coboundary(const SullivanAlgebra& algebra, const Poly& f) {
    const GeneratorSetPtr& gens = algebra.generators_ptr();
    CoboundaryResult out;
    if (f.is_zero()) {
        out.witness = Poly::zero(gens);
        return out;
    }
    auto codeg = f.homogeneous_codegree();
    if (!algebra.d(f).is_zero()) throw PreconditionError("is_coboundary requires a cocycle");
    int n = *codeg;
    std::vector<Monomial> source = basis(*gens, n - 1);
    std::vector<Monomial> target = basis(*gens, n);
    ColumnIndex target_cols = index_basis(target);

    RowSpan span(static_cast<int>(target.size()));
    for (size_t i = 0; i < source.size(); ++i) {
        Poly dm = algebra.d(source[i]);
        if (!dm.is_zero()) span.insert_tagged(poly_to_vec(dm, target_cols), static_cast<int>(i));
    }
    SparseVec fv = poly_to_vec(f, target_cols);
    SparseVec combo;
    SparseVec residual = span.reduce_tracked(fv, combo);
    if (residual.empty()) {
        // f = -sum combo_i d(m_i), so g = -sum combo_i m_i.
        Poly g = Poly::zero(gens);
        for (const auto& [tag, c] : combo) g.add_term(source[static_cast<size_t>(tag)], -c);
        out.witness = std::move(g);
    } else {
        out.refusal = span.refusal_functional(fv);
        out.functional_codegree = n;
    }
    return out;
}

CohomologyTable::ClassExpr cup_product(const SullivanAlgebra& algebra, const CohomologyTable& table,
                                       const Poly& alpha, const Poly& beta) {
    auto ca = alpha.homogeneous_codegree();
    auto cb = beta.homogeneous_codegree();
    int total = (ca ? *ca : 0) + (cb ? *cb : 0);
    if (total > table.max_codegree()) throw RangeError("cup product codegree exceeds the table window");
    if (!algebra.d(alpha).is_zero() || !algebra.d(beta).is_zero())
        throw PreconditionError("cup product requires cocycle inputs");
    return table.reduce_class(alpha * beta);
}

HurewiczImage hurewicz_image(const SullivanAlgebra& algebra, int n) {
    if (n < 2) throw RangeError("hurewicz_image requires codegree >= 2");
    const GeneratorSetPtr& gens = algebra.generators_ptr();
    std::vector<int> vgens;
    for (int i = 0; i < gens->size(); ++i)
        if (gens->at(i).codegree == n) vgens.push_back(i);
    HurewiczImage out;
    out.codegree = n;
    if (vgens.empty()) return out;

    std::vector<Monomial> decomp = basis_min_length(*gens, n, 2);
    std::vector<Monomial> target = basis(*gens, n + 1);
    ColumnIndex target_cols = index_basis(target);

    int cols = static_cast<int>(vgens.size() + decomp.size());
    SparseRationalMatrix mat(static_cast<int>(target.size()), cols);
    for (size_t i = 0; i < vgens.size(); ++i) {
        const Poly& dg = algebra.differential(vgens[i]);
        for (const auto& [m, c] : dg.terms()) mat.set(target_cols.at(m), static_cast<int>(i), c);
    }
    for (size_t j = 0; j < decomp.size(); ++j) {
        Poly dm = algebra.d(decomp[j]);
        for (const auto& [m, c] : dm.terms())
            mat.set(target_cols.at(m), static_cast<int>(vgens.size() + j), c);
    }

    std::vector<SparseVec> kernel = kernel_basis(mat);
    // Project kernel vectors to the generator block; witnesses ride along.
    RowSpan proj(static_cast<int>(vgens.size()));
    std::vector<std::pair<SparseVec, SparseVec>> rows;  // (gen part, decomp part) fully tracked
    for (const SparseVec& k : kernel) {
        SparseVec gen_part, dec_part;
        for (const auto& [c, v] : k) {
            if (c < static_cast<int>(vgens.size()))
                gen_part.emplace_back(c, v);
            else
                dec_part.emplace_back(c - static_cast<int>(vgens.size()), v);
        }
        if (gen_part.empty()) continue;
        SparseVec combo;
        SparseVec residual = proj.reduce_tracked(gen_part, combo);
        if (residual.empty()) continue;
        // Apply the same reduction to the witness part, then normalize.
        SparseVec dec = dec_part;
        for (const auto& [tag, c] : combo) dec = sparse_add(dec, rows[static_cast<size_t>(tag)].second, c);
        Rat lead = residual.front().second;
        for (auto& [c, v] : residual) {
            v /= lead;
            v.canonicalize();
        }
        for (auto& [c, v] : dec) {
            v /= lead;
            v.canonicalize();
        }
        int tag = static_cast<int>(rows.size());
        proj.insert_tagged(residual, tag);
        rows.emplace_back(residual, dec);

        HurewiczImage::Entry e;
        e.combination = Poly::zero(gens);
        for (const auto& [c, v] : residual)
            e.combination = e.combination + Poly::generator(gens, vgens[static_cast<size_t>(c)]).scaled(v);
        e.witness = Poly::zero(gens);
        for (const auto& [c, v] : dec) e.witness.add_term(decomp[static_cast<size_t>(c)], v);
        out.image_basis.push_back(std::move(e));
    }
    return out;
}

TruncatedPresentation presentation(const SullivanAlgebra& algebra, const CohomologyTable& table,
                                   int max_codegree) {
    if (max_codegree > table.max_codegree())
        throw RangeError("presentation bound exceeds the computed table");
    TruncatedPresentation out;
    out.bound = max_codegree;
    out.note = "stability is a truncation heuristic; it cannot certify Noetherianness";

    const GeneratorSetPtr& gens = algebra.generators_ptr();
    std::vector<int> gen_events, rel_events;

    // Discover indecomposable generators codegree by codegree.
    for (int n = 2; n <= max_codegree; ++n) {
        if (table.dim(n) == 0) continue;
        RowSpan decomposables(static_cast<int>(table.representatives(n).size()));
        for (int a = 2; a <= n - 2; ++a) {
            int b = n - a;
            if (b < a) break;
            for (const Poly& ra : table.representatives(a)) {
                for (const Poly& rb : table.representatives(b)) {
                    auto expr = table.reduce_class(ra * rb);
                    SparseVec v;
                    for (size_t i = 0; i < expr.coords.size(); ++i)
                        if (expr.coords[i] != 0) v.emplace_back(static_cast<int>(i), expr.coords[i]);
                    if (!v.empty()) decomposables.insert(v);
                }
            }
        }
        for (size_t i = 0; i < table.representatives(n).size(); ++i) {
            SparseVec e{{static_cast<int>(i), Rat(1)}};
            SparseVec residual = decomposables.reduce(e);
            if (residual.empty()) continue;
            decomposables.insert(residual);
            // Representative of the new ring generator: the matching residual
            // combination of class representatives.
            Poly rep = Poly::zero(gens);
            for (const auto& [idx, c] : residual)
                rep = rep + table.representatives(n)[static_cast<size_t>(idx)].scaled(c);
            TruncatedPresentation::Gen g;
            g.codegree = n;
            g.name = "g" + std::to_string(out.generators.size() + 1);
            g.representative = rep;
            out.generators.push_back(std::move(g));
            if (gen_events.empty() || gen_events.back() != n) gen_events.push_back(n);
        }
    }

    // Free CGA on the discovered generators; relations are the kernel of the
    // evaluation onto H^*, minimal modulo the ideal of earlier relations.
    std::vector<Generator> pres_gens;
    for (const auto& g : out.generators) pres_gens.push_back({g.name, g.codegree});
    if (!pres_gens.empty()) {
        GeneratorSetPtr free_gens = make_generators(pres_gens);
        // Map free-CGA generator index -> representative (generator sets sort
        // canonically, so re-look up by name).
        std::vector<Poly> rep_of(static_cast<size_t>(free_gens->size()), Poly::zero(gens));
        for (const auto& g : out.generators)
            rep_of[static_cast<size_t>(free_gens->require_index(g.name))] = g.representative;

        std::vector<Poly> relations;  // as polynomials in the free CGA
        for (int n = 2; n <= max_codegree; ++n) {
            std::vector<Monomial> free_basis = basis(*free_gens, n);
            if (free_basis.empty()) continue;
            int hdim = table.dim(n);
            SparseRationalMatrix eval(hdim == 0 ? 1 : hdim, static_cast<int>(free_basis.size()));
            for (size_t j = 0; j < free_basis.size(); ++j) {
                Poly value = Poly::unit(gens);
                for (const auto& [idx, exp] : free_basis[j].factors())
                    value = value * rep_of[static_cast<size_t>(idx)].pow(exp);
                if (value.is_zero()) continue;
                auto expr = table.reduce_class(value);
                for (size_t i = 0; i < expr.coords.size(); ++i)
                    if (expr.coords[i] != 0) eval.set(static_cast<int>(i), static_cast<int>(j), expr.coords[i]);
            }
            std::vector<SparseVec> kernel = kernel_basis(eval);
            if (kernel.empty()) continue;

            ColumnIndex free_cols = index_basis(free_basis);
            RowSpan ideal(static_cast<int>(free_basis.size()));
            for (const Poly& rel : relations) {
                int rc = *rel.homogeneous_codegree();
                if (rc > n) continue;
                for (const Monomial& m : basis(*free_gens, n - rc)) {
                    Poly prod = rel * Poly::term(free_gens, m, Rat(1));
                    if (!prod.is_zero()) ideal.insert(poly_to_vec(prod, free_cols));
                }
            }
            for (const SparseVec& k : kernel) {
                SparseVec residual = ideal.reduce(k);
                if (residual.empty()) continue;
                Rat lead = residual.front().second;
                for (auto& [c, v] : residual) {
                    v /= lead;
                    v.canonicalize();
                }
                ideal.insert(residual);
                Poly rel = vec_to_poly(residual, free_basis, free_gens);
                relations.push_back(rel);
                TruncatedPresentation::Rel r;
                r.codegree = n;
                r.display = rel.to_string();
                out.relations.push_back(std::move(r));
                if (rel_events.empty() || rel_events.back() != n) rel_events.push_back(n);
            }
        }

        // Squares of odd presentation generators; automatic in the free CGA
        // but listed for the classical reading of the presentation.
        for (const auto& g : out.generators) {
            if (g.codegree % 2 != 0 && 2 * g.codegree <= max_codegree) {
                TruncatedPresentation::Rel r;
                r.codegree = 2 * g.codegree;
                r.display = g.name + "^2";
                r.odd_square = true;
                out.relations.push_back(std::move(r));
            }
        }
        std::stable_sort(out.relations.begin(), out.relations.end(),
                         [](const TruncatedPresentation::Rel& a, const TruncatedPresentation::Rel& b) {
                             return a.codegree < b.codegree;
                         });
    }

    int width = 0;
    for (const auto& g : out.generators) width = std::max(width, g.codegree);
    int window_lo = max_codegree - width;  // events in (window_lo, bound] break stability
    out.stable = true;
    for (int n : gen_events)
        if (n > window_lo) out.stable = false;
    for (int n : rel_events)
        if (n > window_lo) out.stable = false;
    return out;
}

}  // namespace sullivan
