#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sullivan/classify.hpp"
#include "sullivan/parser.hpp"
#include "sullivan/series.hpp"

using namespace sullivan;

namespace {

SullivanAlgebra hgornotgor() {
    return parse_model("algebra hGornotGor\ngen u 2\ngen v 2\ngen y 3\ngen z 3\nd y = u^2\nd z = u*v\n");
}

SullivanAlgebra non_noetherian() {
    return parse_model("algebra X\ngen v 2\ngen x 3\ngen w 4\nd w = v*x\n");
}

std::vector<int> dims(const CohomologyTable& t) {
    std::vector<int> out;
    for (int n = 0; n <= t.max_codegree(); ++n) out.push_back(t.dim(n));
    return out;
}

}  // namespace

TEST_CASE("regular classification") {
    CHECK(classify_regular(parse_model("algebra K\ngen u 2\ngen v 2\n")));
    CHECK(!classify_regular(parse_model("algebra S\ngen x 3\n")));
    CHECK(!classify_regular(hgornotgor()));
}

TEST_CASE("sci standard form: the hGornotGor model") {
    SciResult res = sci_standard_form(hgornotgor());
    REQUIRE(std::holds_alternative<SciCertificate>(res));
    const SciCertificate& cert = std::get<SciCertificate>(res);
    CHECK(cert.base == std::vector<std::string>{"u", "v"});
    CHECK(cert.fibre == std::vector<std::string>{"y", "z"});
    CHECK(cert.codimension == 2);
}

TEST_CASE("sci standard form: the nonNoetherian model obstruction at w") {
    SullivanAlgebra a = non_noetherian();
    SciResult res = sci_standard_form(a);
    REQUIRE(std::holds_alternative<HurewiczObstruction>(res));
    const HurewiczObstruction& obs = std::get<HurewiczObstruction>(res);
    CHECK(obs.gen == "w");
    CHECK(obs.codegree == 4);
    CHECK(obs.differential.to_string() == "v*x");
    CHECK(verify_obstruction(a, obs));
}

TEST_CASE("sci standard form: unravelled R1 model has codimension 4") {
    SullivanAlgebra r = parse_model(
        "algebra R\ngen x 3\ngen y 3\ngen z 3\ngen w 5\ngen a' 8\nd w = x*y\n");
    SciResult res = sci_standard_form(r);
    REQUIRE(std::holds_alternative<SciCertificate>(res));
    CHECK(std::get<SciCertificate>(res).codimension == 4);
    CHECK(std::get<SciCertificate>(res).base == std::vector<std::string>{"a'"});
}

TEST_CASE("normal-form replay preserves cohomology and reaches d(V^even) = 0") {
    // A genuine change of variables: x6 with dx = u^2 t solved by g = -yt.
    SullivanAlgebra g = parse_model(
        "algebra G\ngen u 2\ngen t 3\ngen y 3\ngen x 6\ngen w 7\n"
        "d y = u^2\nd x = u^2*t\nd w = u*x - u*y*t\n");
    SciResult res = sci_standard_form(g);
    REQUIRE(std::holds_alternative<SciCertificate>(res));
    const SciCertificate& cert = std::get<SciCertificate>(res);
    SullivanAlgebra normal = replay_normal_form(g, cert);
    CHECK(normal.validate().ok());
    CHECK(normal.validate().even_cocycle_only);
    CHECK(dims(cohomology(g, 16)) == dims(cohomology(normal, 16)));
}

TEST_CASE("order-insensitivity at a codegree: permuted names keep verdict and codimension") {
    // Same algebra with generator names chosen to reverse the canonical order
    // at codegree 2.
    SullivanAlgebra a = parse_model(
        "algebra P1\ngen a 2\ngen b 2\ngen y 3\ngen z 3\nd y = a^2\nd z = a*b\n");
    SullivanAlgebra b = parse_model(
        "algebra P2\ngen b 2\ngen a 2\ngen y 3\ngen z 3\nd y = b^2\nd z = b*a\n");
    SciResult ra = sci_standard_form(a), rb = sci_standard_form(b);
    REQUIRE(std::holds_alternative<SciCertificate>(ra));
    REQUIRE(std::holds_alternative<SciCertificate>(rb));
    CHECK(std::get<SciCertificate>(ra).codimension == std::get<SciCertificate>(rb).codimension);
}

TEST_CASE("gorenstein shift") {
    SUBCASE("the hGornotGor model: (1+1) - (3+3) = -4") {
        SciResult res = sci_standard_form(hgornotgor());
        CHECK(gorenstein_shift(hgornotgor(), std::get<SciCertificate>(res)) == -4);
    }
    SUBCASE("(Lambda(x2,y3), dy=x^2): 1 - 3 = -2, matching the functional-equation a") {
        SullivanAlgebra s = parse_model("algebra S2\ngen x 2\ngen y 3\nd y = x^2\n");
        SciResult res = sci_standard_form(s);
        long shift = gorenstein_shift(s, std::get<SciCertificate>(res));
        CHECK(shift == -2);
        FitResult fit = rational_fit(hilbert_series(cohomology(s, 20)), {});
        REQUIRE(fit.verdict == FitVerdict::Success);
        DualityVerdict v = functional_check(*fit.form);
        CHECK(v.kind == DualityVerdict::Kind::Defect0);
        CHECK(v.a == shift);
    }
    SUBCASE("a single 3-sphere has shift -3") {
        SullivanAlgebra s = parse_model("algebra S3\ngen x 3\n");
        SciResult res = sci_standard_form(s);
        CHECK(gorenstein_shift(s, std::get<SciCertificate>(res)) == -3);
    }
}

TEST_CASE("poincare duality check") {
    SUBCASE("(Lambda(x2,y3), dy=x^2) satisfies PD with n = 2") {
        SullivanAlgebra s = parse_model("algebra S2\ngen x 2\ngen y 3\nd y = x^2\n");
        CHECK(pd_check(cohomology(s, 12), 2) == Tri::Yes);
    }
    SUBCASE("Lambda(x3,y3) satisfies PD with n = 6") {
        SullivanAlgebra s = parse_model("algebra T\ngen x 3\ngen y 3\n");
        CHECK(pd_check(cohomology(s, 12), 6) == Tri::Yes);
    }
    SUBCASE("non-vanishing cohomology is inconclusive") {
        CHECK(pd_check(cohomology(hgornotgor(), 12), 8) == Tri::Unknown);
    }
    SUBCASE("a wrong formal dimension is refused") {
        SullivanAlgebra s = parse_model("algebra F\ngen x 3\ngen y 3\ngen z 3\n");
        CHECK(pd_check(cohomology(s, 14), 9) == Tri::Yes);
        // n = 10 vanishes above within the window but dim H^10 != 1.
        CHECK(pd_check(cohomology(s, 14), 10) == Tri::No);
    }
}

TEST_CASE("classification report wiring") {
    SUBCASE("the hGornotGor model") {
        ClassificationReport rep = classify(hgornotgor(), 16, 24);
        CHECK(rep.valid);
        CHECK(rep.pure);
        CHECK(rep.sci);
        CHECK(rep.codimension == 2);
        CHECK(rep.gci);
        CHECK(rep.g_codimension == 2);
        CHECK(rep.loop_growth_degree == 1);
        CHECK(rep.noetherian == Tri::Yes);
        CHECK(rep.zci == Tri::Yes);
        CHECK(rep.eci == Tri::Yes);
        CHECK(*rep.gorenstein_shift_value == -4);
        CHECK(!rep.elliptic_heuristic);
        CHECK(rep.nci_length_bound == 2);
        CHECK(rep.warnings.empty());
    }
    SUBCASE("the nonNoetherian model") {
        ClassificationReport rep = classify(non_noetherian(), 16, 24);
        CHECK(rep.valid);
        CHECK(!rep.sci);
        REQUIRE(rep.obstruction.has_value());
        CHECK(rep.obstruction->gen == "w");
        CHECK(!rep.gci);
        CHECK(rep.noetherian == Tri::No);
        CHECK(rep.zci == Tri::No);
        CHECK(rep.eci == Tri::No);
    }
    SUBCASE("regular model: gci with codimension 0") {
        ClassificationReport rep = classify(parse_model("algebra K\ngen u 2\ngen v 2\n"), 12, 24);
        CHECK(rep.regular);
        CHECK(rep.sci);
        CHECK(rep.codimension == 0);
        CHECK(rep.gci);
        CHECK(rep.loop_growth_degree == -1);
        CHECK(rep.nci_length_bound == 0);
    }
    SUBCASE("elliptic heuristic fires for finite cohomology") {
        ClassificationReport rep = classify(parse_model("algebra S2\ngen x 2\ngen y 3\nd y = x^2\n"), 16, 24);
        CHECK(rep.elliptic_heuristic);
    }
}

TEST_CASE("gci_report fragments") {
    SUBCASE("certificate side with PBW cross-check") {
        SullivanAlgebra a6 = hgornotgor();
        GciFragment frag = gci_report(a6, sci_standard_form(a6), 24);
        CHECK(frag.gci);
        CHECK(frag.g_codimension == 2);
        CHECK(frag.window_growth_degree == 1);
        CHECK(frag.cross_check_ok);
    }
    SUBCASE("obstruction side is not gci") {
        SullivanAlgebra x = non_noetherian();
        GciFragment frag = gci_report(x, sci_standard_form(x), 24);
        CHECK(!frag.gci);
    }
}

TEST_CASE("normal-form replay composes witnesses across even levels") {
    // Two even generators with genuine witnesses: X10 needs -u^2 x (which
    // mentions the lower even x), x6 needs -yt; w7 references x.
    SullivanAlgebra m = parse_model(
        "algebra TwoWitness\ngen u 2\ngen t 3\ngen y 3\ngen x 6\ngen w 7\ngen X 10\n"
        "d y = u^2\nd x = u^2*t\nd w = u*x - u*y*t\nd X = u^4*t\n");
    SciResult res = sci_standard_form(m);
    REQUIRE(std::holds_alternative<SciCertificate>(res));
    const SciCertificate& cert = std::get<SciCertificate>(res);
    int nonzero_witnesses = 0;
    for (const auto& step : cert.steps)
        if (step.kind == SciCertificate::Step::Kind::ChangeAndStripEven && !step.witness.is_zero())
            ++nonzero_witnesses;
    CHECK(nonzero_witnesses == 2);
    SullivanAlgebra normal = replay_normal_form(m, cert);
    CHECK(normal.validate().ok());
    CHECK(normal.validate().even_cocycle_only);
    CohomologyTable before = cohomology(m, 20);
    CohomologyTable after = cohomology(normal, 20);
    for (int n = 0; n <= 20; ++n) CHECK(before.dim(n) == after.dim(n));
}
