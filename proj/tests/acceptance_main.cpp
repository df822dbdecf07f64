// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Returns the number of failed criteria.

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "sullivan/classify.hpp"
#include "sullivan/parser.hpp"
#include "sullivan/report.hpp"
#include "sullivan/series.hpp"
#include "sullivan/unravel.hpp"
#include "support/dense_oracle.hpp"
#include "support/random_models.hpp"

using namespace sullivan;
using namespace sullivan::testsupport;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << what;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

std::string read_model(const std::string& name) {
    std::ifstream in(std::string(SULLIVAN_MODELS_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SullivanAlgebra model(const std::string& name) { return parse_model(read_model(name)); }

LaurentPoly lp(std::initializer_list<std::pair<int, int>> coeffs) {
    LaurentPoly p;
    for (auto [e, c] : coeffs) p.add(e, Rat(c));
    return p;
}

std::string monic_string(const Poly& p) {
    if (p.is_zero()) return "0";
    Rat lead = p.terms().begin()->second;
    return p.scaled(Rat(1) / lead).to_string();
}

// 1. the hGornotGor model cohomology and presentation.
void criterion_1() {
    SullivanAlgebra a6 = model("hgornotgor.sul");
    CohomologyTable table = cohomology(a6, 12);
    std::vector<int> dims;
    for (int n = 0; n <= 8; ++n) dims.push_back(table.dim(n));
    bool ok = dims == std::vector<int>{1, 0, 2, 0, 1, 1, 1, 1, 1};

    TruncatedPresentation pres = presentation(a6, table, 12);
    std::vector<int> gen_codegs;
    for (const auto& g : pres.generators) gen_codegs.push_back(g.codegree);
    ok = ok && gen_codegs == std::vector<int>{2, 2, 5};
    std::vector<std::string> rels;
    for (const auto& r : pres.relations) rels.push_back(r.display);
    ok = ok && rels == std::vector<std::string>{"g1^2", "g1*g2", "g1*g3", "g3^2"};
    ok = ok && pres.stable;
    report(1, "the hGornotGor model cohomology 1,0,2,0,1,1,1,1,1 and stable presentation "
              "u2,v2,p5 / (u^2, uv, up, p^2)", ok);
}

// 2. the hGornotGor model duality.
void criterion_2() {
    SullivanAlgebra a6 = model("hgornotgor.sul");
    LaurentSeries series = hilbert_series(cohomology(a6, 30));
    FitResult fit = rational_fit(series, {2});
    bool ok = fit.verdict == FitVerdict::Success;
    if (ok) {
        RationalSeriesForm target{lp({{0, 1}, {2, 1}, {4, -1}, {5, 1}}), {2}};  // (1+t^5)/(1-t^2)+t^2
        ok = forms_equal(*fit.form, target);
        DualityVerdict v = functional_check(*fit.form);
        ok = ok && v.kind == DualityVerdict::Kind::Defect1 && v.defect == 1 && v.r == 1 &&
             v.a == -4 && v.delta_reduced && *v.delta_reduced == LaurentPoly::monomial(-2) &&
             v.second_equation_verified;
    }
    report(2, "the hGornotGor model duality: fit (1+t^5)/(1-t^2)+t^2; defect 1, r=1, a=-4, "
              "delta=t^-2, delta(1/t)=t^4 delta(t)", ok);
}

// 3. the hGornotGor model classification.
void criterion_3() {
    SullivanAlgebra a6 = model("hgornotgor.sul");
    SciResult res = sci_standard_form(a6);
    bool ok = std::holds_alternative<SciCertificate>(res);
    if (ok) {
        const SciCertificate& cert = std::get<SciCertificate>(res);
        ok = cert.base == std::vector<std::string>{"u", "v"} &&
             cert.fibre == std::vector<std::string>{"y", "z"} && cert.codimension == 2;
        ok = ok && gorenstein_shift(a6, cert) == -4;
        FitResult fit = rational_fit(hilbert_series(cohomology(a6, 30)), {2});
        ok = ok && fit.verdict == FitVerdict::Success;
        if (ok) {
            RationalSeriesForm pred = hochschild_series_prediction(*fit.form, {3, 3});
            RationalSeriesForm target = *fit.form;
            target.denominator_degrees.push_back(2);
            target.denominator_degrees.push_back(2);
            ok = forms_equal(pred, target);
        }
    }
    report(3, "the hGornotGor model classification: sci base {u,v}, fibre {y,z}, codim 2; "
              "shift -4; Hochschild prediction p_X/(1-t^2)^2", ok);
}

// 4. the nonNoetherian model.
void criterion_4() {
    SullivanAlgebra x = model("non_noetherian.sul");
    SciResult res = sci_standard_form(x);
    bool ok = std::holds_alternative<HurewiczObstruction>(res);
    if (ok) {
        const HurewiczObstruction& obs = std::get<HurewiczObstruction>(res);
        ok = obs.gen == "w" && obs.codegree == 4 && verify_obstruction(x, obs);
    }
    CohomologyTable table = cohomology(x, 12);
    std::vector<int> dims;
    for (int n = 0; n <= 11; ++n) dims.push_back(table.dim(n));
    ok = ok && dims == std::vector<int>{1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1};
    TruncatedPresentation pres = presentation(x, table, 12);
    ok = ok && !pres.stable;
    report(4, "the nonNoetherian model: verifiable obstruction at w4; Hilbert prefix "
              "1,0,1,1,1,0,1,1,1,0,1,1; presentation unstable", ok);
}

// 5. The R1 unravelling model.
void criterion_5() {
    SullivanAlgebra r = model("unravel_1.sul");
    NciCertificate cert = nci_unravel(r);
    bool ok = cert.length_bound <= 5 && cert.final_codimension == 4;
    int adjoins = 0;
    for (const NciMove& mv : cert.moves)
        if (mv.kind == NciMove::Kind::AdjoinOdd) {
            ++adjoins;
            ok = ok && mv.codegree == 5 && monic_string(mv.payload) == "x*y";
        }
    ok = ok && adjoins == 1;
    // One change of variables a -> a - wz up to sign/scalar: payload is a
    // single length-2 monomial on z and the adjoined generator.
    int covs = 0;
    for (const NciMove& mv : cert.moves)
        if (mv.kind == NciMove::Kind::ChangeOfVariables) {
            ++covs;
            ok = ok && mv.gen == "a" && mv.payload.term_count() == 1 &&
                 mv.payload.terms().begin()->first.length() == 2;
        }
    ok = ok && covs == 1 && verify_certificate(r, cert).ok;
    report(5, "R1: one adjoined w5 with d = xy (canonical tie-break), one "
              "change of variables a - wz, length <= 5, codimension 4", ok);
}

// 6. The R2 unravelling model.
void criterion_6() {
    SullivanAlgebra r = model("unravel_2.sul");
    NciCertificate cert = nci_unravel(r);
    bool ok = cert.length_bound <= 11 && cert.final_codimension == 8;
    std::vector<std::string> payloads;
    std::string w_name;
    for (const NciMove& mv : cert.moves)
        if (mv.kind == NciMove::Kind::AdjoinOdd) {
            payloads.push_back(monic_string(mv.payload));
            if (payloads.back() == "y*y'") w_name = mv.gen;
        }
    ok = ok && payloads.size() == 3 && !w_name.empty();
    if (ok) {
        std::vector<std::string> expected{"y*y'", "y*" + w_name, "y'*" + w_name};
        std::sort(payloads.begin(), payloads.end());
        std::sort(expected.begin(), expected.end());
        ok = payloads == expected;
    }
    ok = ok && verify_certificate(r, cert).ok;
    report(6, "R2: adjoined differentials {yy', wy, wy'} as a multiset, "
              "length <= 11, codimension 8", ok);
}

// 7. Even-sphere rewrite.
void criterion_7() {
    SullivanAlgebra e = model("even_sphere.sul");  // m = 2: x4, y7
    SullivanAlgebra out = odd_sphere_rewrite(e, "x", "y");
    bool ok = out.differential("x").is_zero();
    Poly expected = Poly::generator(out.generators_ptr(), out.generators().require_index("x")).pow(2) +
                    Poly::generator(out.generators_ptr(), out.generators().require_index("u")).pow(4);
    ok = ok && out.differential("y") == expected;
    const int bound = 2 * (4 * 2 - 1);  // 2(4m-1) = 14
    CohomologyTable before = cohomology(e, bound);
    CohomologyTable after = cohomology(out, bound);
    for (int n = 0; n <= bound; ++n) ok = ok && before.dim(n) == after.dim(n);
    report(7, "Even-sphere rewrite: dx' = 0, dy = x'^2 + (b - a^2/4), cohomology "
              "unchanged up to codegree 14", ok);
}

// 8. Regular/loop suite.
void criterion_8() {
    SullivanAlgebra kv = model("kv2.sul");
    bool ok = classify_regular(kv);
    LaurentSeries loop_kv = loop_homology_series(kv, 24);
    ok = ok && loop_kv.at(0) == 1 && loop_kv.at(1) == 2 && loop_kv.at(2) == 1;
    for (int n = 3; n <= 24; ++n) ok = ok && loop_kv.at(n) == 0;

    SullivanAlgebra a6 = model("hgornotgor.sul");
    LaurentSeries loop_a6 = loop_homology_series(a6, 24);
    RationalSeriesForm target{lp({{0, 1}, {1, 2}, {2, 1}}), {2, 2}};  // (1+t)^2/(1-t^2)^2
    LaurentSeries expected = target.expand(0, 24);
    ok = ok && loop_a6 == expected;
    GrowthReport growth = growth_degree(loop_a6);
    ok = ok && growth.conclusive && growth.growth_degree == 1;
    ok = ok && growth.growth_degree == static_cast<int>(a6.odd_indices().size()) - 1;
    report(8, "Regular/loop: Lambda(u2,v2) regular with finite loop series 1,2,1; hGornotGor "
              "loop series (1+t)^2/(1-t^2)^2 with growth degree 1", ok);
}

// 9. Oracle equivalence on 50 seeded random models.
void criterion_9() {
    std::mt19937 rng(987654321u);
    RandomModelOptions opt;
    opt.min_gens = 3;
    opt.max_gens = 6;
    opt.max_codegree = 8;
    opt.zero_diff_percent = 25;
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        SullivanAlgebra a = random_model(rng, opt);
        CohomologyTable table = cohomology(a, 20);
        std::vector<long> oracle = dense_cohomology_dims(a, 20);
        for (int n = 0; n <= 20; ++n)
            if (static_cast<long>(table.dim(n)) != oracle[static_cast<size_t>(n)]) {
                ok = false;
                detail = "trial " + std::to_string(trial) + " codegree " + std::to_string(n);
            }
    }
    report(9, "sparse cohomology equals the dense fraction-free oracle on 50 seeded "
              "models up to codegree 20", ok, detail);
}

// 10. Property suite, >= 10^4 randomized cases, zero failures.
void criterion_10() {
    long cases = 0, bad = 0;
    std::mt19937 rng(13579u);
    std::uniform_int_distribution<int> codeg(2, 9);

    auto universe = [&](std::mt19937& r) {
        std::uniform_int_distribution<int> count(2, 5);
        std::uniform_int_distribution<int> cd(2, 6);
        std::vector<Generator> gens;
        int n = count(r);
        for (int i = 0; i < n; ++i)
            gens.push_back({"g" + std::string(1, static_cast<char>('a' + i)), cd(r)});
        return make_generators(gens);
    };

    for (int trial = 0; trial < 3000; ++trial) {  // graded commutativity
        auto gens = universe(rng);
        Poly a = random_homogeneous(rng, gens, codeg(rng));
        Poly b = random_homogeneous(rng, gens, codeg(rng));
        auto ca = a.homogeneous_codegree();
        auto cb = b.homogeneous_codegree();
        int sign = (ca && cb && (*ca % 2) && (*cb % 2)) ? -1 : 1;
        ++cases;
        if (!(a * b == (b * a).scaled(Rat(sign)))) ++bad;
    }
    for (int trial = 0; trial < 2500; ++trial) {  // associativity
        auto gens = universe(rng);
        Poly a = random_poly(rng, gens), b = random_poly(rng, gens), c = random_poly(rng, gens);
        ++cases;
        if (!((a * b) * c == a * (b * c))) ++bad;
    }
    for (int trial = 0; trial < 500; ++trial) {  // Leibniz + d^2 = 0
        SullivanAlgebra alg = random_model(rng);
        for (int i = 0; i < alg.generators().size(); ++i) {
            ++cases;
            if (!alg.d(alg.differential(i)).is_zero()) ++bad;
        }
        for (int k = 0; k < 4; ++k) {
            Poly a = random_homogeneous(rng, alg.generators_ptr(), codeg(rng));
            Poly b = random_poly(rng, alg.generators_ptr(), 8);
            auto ca = a.homogeneous_codegree();
            int sign = (ca && *ca % 2 != 0) ? -1 : 1;
            ++cases;
            if (!(alg.d(a * b) == alg.d(a) * b + (a * alg.d(b)).scaled(Rat(sign)))) ++bad;
        }
    }
    for (int trial = 0; trial < 60; ++trial) {  // basis vs generating function
        auto gens = universe(rng);
        auto counts = dimension_counts(*gens, 14);
        for (int n = 0; n <= 14; ++n) {
            ++cases;
            if (counts[static_cast<size_t>(n)] != static_cast<long>(basis(*gens, n).size())) ++bad;
        }
    }
    for (int trial = 0; trial < 25; ++trial) {  // certificate replay determinism
        RandomModelOptions opt;
        opt.max_gens = 5;
        opt.max_codegree = 7;
        SullivanAlgebra alg = random_model(rng, opt);
        NciCertificate c1 = nci_unravel(alg);
        NciCertificate c2 = nci_unravel(alg);
        ++cases;
        bool same = c1.moves.size() == c2.moves.size() && c1.length_bound == c2.length_bound;
        for (size_t i = 0; same && i < c1.moves.size(); ++i)
            same = c1.moves[i].gen == c2.moves[i].gen &&
                   c1.moves[i].payload.to_string() == c2.moves[i].payload.to_string();
        if (!same || !verify_certificate(alg, c1).ok) ++bad;
    }
    bool ok = bad == 0 && cases >= 10000;
    report(10, "property suite: commutativity, associativity, Leibniz, d^2=0, "
               "basis/series agreement, replay determinism (" +
                   std::to_string(cases) + " cases)", ok,
           bad ? std::to_string(bad) + " failures" : "fewer than 10^4 cases");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0)
        std::cout << "acceptance: all 10 criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criterion/criteria FAILED\n";
    return failures;
}
