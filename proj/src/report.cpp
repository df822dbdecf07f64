#include "sullivan/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "sullivan/basis.hpp"
#include "sullivan/parser.hpp"

namespace sullivan {

using nlohmann::json;

std::string input_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

namespace {

json int_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());  // oversize integers degrade to strings
}

// Series serialize as (exponent, numerator, denominator) integer triples,
// zero coefficients omitted.
json series_json(const LaurentSeries& s) {
    json triples = json::array();
    for (int n = s.lo(); n <= s.hi(); ++n) {
        Rat c = s.at(n);
        if (c == 0) continue;
        triples.push_back(json::array({n, int_json(c.get_num()), int_json(c.get_den())}));
    }
    return json{{"window", json::array({s.lo(), s.hi()})}, {"coefficients", triples}};
}

json poly_triples(const LaurentPoly& p) {
    json triples = json::array();
    for (const auto& [e, c] : p.coeffs())
        triples.push_back(json::array({e, int_json(c.get_num()), int_json(c.get_den())}));
    return triples;
}

json form_json(const RationalSeriesForm& f) {
    return json{{"numerator", poly_triples(f.numerator)},
                {"denominator_degrees", f.denominator_degrees},
                {"display", f.to_string()}};
}

json sci_certificate_json(const SciCertificate& cert) {
    json steps = json::array();
    for (const auto& step : cert.steps) {
        steps.push_back(json{
            {"kind", step.kind == SciCertificate::Step::Kind::StripOdd ? "strip-odd"
                                                                       : "change-and-strip-even"},
            {"gen", step.gen},
            {"codegree", step.codegree},
            {"witness", step.witness.is_zero() ? "0" : step.witness.to_string()}});
    }
    return json{{"base", cert.base},
                {"fibre", cert.fibre},
                {"codimension", cert.codimension},
                {"steps", steps}};
}

json obstruction_json(const HurewiczObstruction& obs, const SullivanAlgebra& a) {
    json functional = json::array();
    for (const auto& [col, c] : obs.refusal)
        functional.push_back(json{
            {"monomial", obs.functional_basis[static_cast<size_t>(col)].to_string(a.generators())},
            {"coefficient", to_string(c)}});
    return json{{"gen", obs.gen},
                {"codegree", obs.codegree},
                {"differential", obs.differential.to_string()},
                {"refusal_functional", functional}};
}

std::string move_kind_name(NciMove::Kind k) {
    switch (k) {
        case NciMove::Kind::AdjoinOdd: return "adjoin-odd";
        case NciMove::Kind::QuotientEven: return "quotient-even";
        case NciMove::Kind::DropOdd: return "drop-odd";
        case NciMove::Kind::ChangeOfVariables: return "change-of-variables";
    }
    return "?";
}

json nci_certificate_json(const NciCertificate& cert) {
    json moves = json::array();
    for (const NciMove& mv : cert.moves) {
        moves.push_back(json{{"kind", move_kind_name(mv.kind)},
                             {"gen", mv.gen},
                             {"codegree", mv.codegree},
                             {"payload", mv.payload.is_zero() ? "0" : mv.payload.to_string()}});
    }
    json out{{"moves", moves},
             {"adjoin_count", cert.adjoin_count},
             {"quotient_count", cert.quotient_count},
             {"final_codimension", cert.final_codimension},
             {"length_bound", cert.length_bound}};
    if (cert.final_snapshot) out["final_snapshot"] = emit_model(*cert.final_snapshot);
    if (cert.final_sci) out["final_sci"] = sci_certificate_json(*cert.final_sci);
    return out;
}

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Unknown: return "undetermined";
    }
    return "?";
}

struct CommandContext {
    json machine;
    std::string text;
    std::vector<std::string> warnings;
    int exit_code = 0;

    void line(const std::string& s) { text += s + "\n"; }
};

std::vector<int> auto_denominator(const LaurentSeries& series) {
    auto upper_score = [](const LaurentSeries& s) {
        int count = 0;
        for (int n = s.lo() + (s.hi() - s.lo()) / 2 + 1; n <= s.hi(); ++n)
            if (s.at(n) != 0) ++count;
        return count;
    };
    std::vector<int> out;
    LaurentSeries cur = series;
    int score = upper_score(cur);
    int max_d = std::max(1, (series.hi() - series.lo()) / 3);
    while (score > 0 && static_cast<int>(out.size()) < 8) {
        int best_d = 0, best_score = score;
        // Even degrees first: closed forms over polynomial bases carry
        // (1-t^{even}) factors.
        std::vector<int> order;
        for (int d = 2; d <= max_d; d += 2) order.push_back(d);
        for (int d = 1; d <= max_d; d += 2) order.push_back(d);
        for (int d : order) {
            LaurentSeries trial = cur.times_poly(LaurentPoly::one_minus_power(d));
            int s = upper_score(trial);
            if (s < best_score) {
                best_score = s;
                best_d = d;
            }
        }
        if (best_d == 0) break;
        out.push_back(best_d);
        cur = cur.times_poly(LaurentPoly::one_minus_power(best_d));
        score = best_score;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Fits the Hilbert series of the table; reports the denominator choice.
FitResult fit_with_options(const LaurentSeries& series, const RunOptions& options,
                           std::vector<int>* chosen) {
    std::vector<int> denom = options.denominator;
    if (options.denominator_auto) denom = auto_denominator(series);
    if (chosen) *chosen = denom;
    return rational_fit(series, denom);
}

void do_cohomology(const SullivanAlgebra& a, const RunOptions& opt, CommandContext& ctx) {
    CohomologyTable table = cohomology(a, opt.max_codegree);
    json dims = json::array();
    json reps = json::object();
    std::string dims_line;
    for (int n = 0; n <= table.max_codegree(); ++n) {
        dims.push_back(table.dim(n));
        if (!dims_line.empty()) dims_line += ",";
        dims_line += std::to_string(table.dim(n));
        if (table.dim(n) > 0) {
            json list = json::array();
            for (const Poly& r : table.representatives(n)) list.push_back(r.to_string());
            reps[std::to_string(n)] = list;
        }
    }
    ctx.machine["results"] = json{{"dimensions", dims}, {"representatives", reps}};
    ctx.line("cohomology dimensions, codegrees 0.." + std::to_string(table.max_codegree()) + ":");
    ctx.line("  " + dims_line);
    for (int n = 0; n <= table.max_codegree(); ++n) {
        if (table.dim(n) == 0) continue;
        std::string row = "  H^" + std::to_string(n) + ": ";
        bool first = true;
        for (const Poly& r : table.representatives(n)) {
            if (!first) row += " ; ";
            row += "[" + r.to_string() + "]";
            first = false;
        }
        ctx.line(row);
    }
}

void do_hilbert(const SullivanAlgebra& a, const RunOptions& opt, CommandContext& ctx) {
    CohomologyTable table = cohomology(a, opt.max_codegree);
    LaurentSeries series = hilbert_series(table);
    ctx.machine["results"] = json{{"series", series_json(series)}};
    ctx.line("hilbert series coefficients 0.." + std::to_string(series.hi()) + ": " + series.to_string());
}

void do_presentation(const SullivanAlgebra& a, const RunOptions& opt, CommandContext& ctx) {
    CohomologyTable table = cohomology(a, opt.max_codegree);
    TruncatedPresentation pres = presentation(a, table, opt.max_codegree);
    json gens = json::array();
    for (const auto& g : pres.generators)
        gens.push_back(json{{"name", g.name},
                            {"codegree", g.codegree},
                            {"representative", g.representative.to_string()}});
    json rels = json::array();
    for (const auto& r : pres.relations)
        rels.push_back(json{{"codegree", r.codegree}, {"relation", r.display}, {"odd_square", r.odd_square}});
    ctx.machine["results"] =
        json{{"generators", gens}, {"relations", rels}, {"stable", pres.stable}, {"note", pres.note}};
    ctx.line("truncated presentation at bound " + std::to_string(pres.bound) + ":");
    for (const auto& g : pres.generators)
        ctx.line("  generator " + g.name + " (codegree " + std::to_string(g.codegree) + ") = [" +
                 g.representative.to_string() + "]");
    for (const auto& r : pres.relations)
        ctx.line("  relation (codegree " + std::to_string(r.codegree) + "): " + r.display +
                 (r.odd_square ? "   # odd square" : ""));
    ctx.line(std::string("  stable: ") + (pres.stable ? "yes" : "no"));
    ctx.warnings.push_back(pres.note);
}

void do_classify(const SullivanAlgebra& a, const RunOptions& opt, CommandContext& ctx) {
    ClassificationReport rep = classify(a, opt.max_codegree, opt.max_degree);
    json res{{"valid", rep.valid},
             {"minimal", rep.minimal},
             {"pure", rep.pure},
             {"even_cocycle_only", rep.even_cocycle_only},
             {"regular", rep.regular},
             {"sci", rep.sci},
             {"gci", rep.gci},
             {"noetherian", tri_name(rep.noetherian)},
             {"zci", tri_name(rep.zci)},
             {"eci", tri_name(rep.eci)},
             {"bci", tri_name(rep.bci)},
             {"qci", tri_name(rep.qci)},
             {"elliptic_heuristic", rep.elliptic_heuristic},
             {"loop_growth_degree", rep.loop_growth_degree},
             {"nci_length_bound", rep.nci_length_bound}};
    if (rep.sci) {
        res["codimension"] = rep.codimension;
        res["g_codimension"] = rep.g_codimension;
        res["gorenstein_shift"] = *rep.gorenstein_shift_value;
        res["certificate"] = sci_certificate_json(*rep.certificate);
    } else {
        res["obstruction"] = obstruction_json(*rep.obstruction, a);
        ctx.exit_code = 1;
    }
    ctx.machine["results"] = res;

    ctx.line(std::string("regular: ") + (rep.regular ? "yes" : "no"));
    ctx.line(std::string("pure: ") + (rep.pure ? "yes" : "no") + "  even-cocycle-only: " +
             (rep.even_cocycle_only ? "yes" : "no"));
    if (rep.sci) {
        ctx.line("sci: yes  codimension " + std::to_string(rep.codimension));
        std::string base = "  base:";
        for (const auto& s : rep.certificate->base) base += " " + s;
        std::string fibre = "  fibre:";
        for (const auto& s : rep.certificate->fibre) fibre += " " + s;
        ctx.line(base);
        ctx.line(fibre);
        ctx.line("gci: yes  g-codimension " + std::to_string(rep.g_codimension));
        ctx.line("gorenstein shift: " + std::to_string(*rep.gorenstein_shift_value));
    } else {
        ctx.line("not sci; obstruction at " + rep.obstruction->gen + " (d " + rep.obstruction->gen +
                 " = " + rep.obstruction->differential.to_string() + ")");
        ctx.line("gci: no (dual Hurewicz fails in even codegree " +
                 std::to_string(rep.obstruction->codegree) + "; cohomology is not Noetherian)");
    }
    ctx.line("noetherian: " + tri_name(rep.noetherian));
    ctx.line("zci: " + tri_name(rep.zci) + "  eci: " + tri_name(rep.eci) + "  bci: " +
             tri_name(rep.bci) + "  qci: " + tri_name(rep.qci));
    ctx.line(std::string("elliptic (heuristic): ") + (rep.elliptic_heuristic ? "yes" : "no"));
    ctx.line("loop growth degree: " + std::to_string(rep.loop_growth_degree));
    ctx.line("nci length bound: " + std::to_string(rep.nci_length_bound));
    for (const std::string& w : rep.warnings) ctx.warnings.push_back(w);
}

void do_standard_form(const SullivanAlgebra& a, const RunOptions&, CommandContext& ctx) {
    SciResult res = sci_standard_form(a);
    if (std::holds_alternative<SciCertificate>(res)) {
        const SciCertificate& cert = std::get<SciCertificate>(res);
        ctx.machine["results"] = json{{"sci", true}, {"certificate", sci_certificate_json(cert)}};
        ctx.line("sci standard form reached; codimension " + std::to_string(cert.codimension));
        SullivanAlgebra normal = replay_normal_form(a, cert);
        ctx.machine["results"]["normal_form"] = emit_model(normal);
        ctx.line("normal form (d(V^even) = 0):");
        std::istringstream lines(emit_model(normal));
        std::string l;
        while (std::getline(lines, l)) ctx.line("  " + l);
    } else {
        const HurewiczObstruction& obs = std::get<HurewiczObstruction>(res);
        ctx.machine["results"] = json{{"sci", false}, {"obstruction", obstruction_json(obs, a)}};
        ctx.line("not sci; obstruction at " + obs.gen + " (d " + obs.gen + " = " +
                 obs.differential.to_string() + ")");
        ctx.exit_code = 1;
    }
}

void do_unravel(const SullivanAlgebra& a, const RunOptions&, CommandContext& ctx) {
    NciCertificate cert = nci_unravel(a);
    ctx.machine["results"] = json{{"certificate", nci_certificate_json(cert)}};
    ctx.line("nci certificate: length bound " + std::to_string(cert.length_bound) + " (" +
             std::to_string(cert.adjoin_count) + " adjoin + " + std::to_string(cert.quotient_count) +
             " quotient + final sci codimension " + std::to_string(cert.final_codimension) + ")");
    for (const NciMove& mv : cert.moves) {
        std::string desc = "  " + std::string(move_kind_name(mv.kind)) + " " + mv.gen + " (codegree " +
                           std::to_string(mv.codegree) + ")";
        if (mv.kind == NciMove::Kind::AdjoinOdd) desc += "  d = " + mv.payload.to_string();
        if (mv.kind == NciMove::Kind::ChangeOfVariables)
            desc += "  " + mv.gen + " -> " + mv.gen + " + (" + mv.payload.to_string() + ")";
        ctx.line(desc);
    }
}

void do_loop_homology(const SullivanAlgebra& a, const RunOptions& opt, CommandContext& ctx) {
    LaurentSeries series = loop_homology_series(a, opt.max_degree);
    GrowthReport growth = growth_degree(series);
    json res{{"series", series_json(series)},
             {"growth_degree", growth.growth_degree},
             {"conclusive", growth.conclusive},
             {"note", growth.note}};
    if (growth.conclusive && growth.growth_degree >= 0)
        res["bound_constant"] = to_string(growth.bound_constant);
    ctx.machine["results"] = res;
    ctx.line("loop homology series, degrees 0.." + std::to_string(series.hi()) + ": " +
             series.to_string());
    if (growth.conclusive)
        ctx.line("growth degree: " + std::to_string(growth.growth_degree));
    else {
        ctx.line("growth degree: inconclusive (" + growth.note + ")");
        ctx.warnings.push_back("growth inconclusive: " + growth.note);
    }
}

void do_duality(const SullivanAlgebra& a, const RunOptions& opt, CommandContext& ctx) {
    CohomologyTable table = cohomology(a, opt.max_codegree);
    LaurentSeries series = hilbert_series(table);
    std::vector<int> denom;
    FitResult fit = fit_with_options(series, opt, &denom);
    json res{{"series", series_json(series)}, {"denominator_degrees", denom}};
    if (fit.verdict != FitVerdict::Success) {
        res["fit"] = fit.verdict == FitVerdict::Refusal ? "refusal" : "inconclusive";
        res["note"] = fit.note;
        ctx.machine["results"] = res;
        ctx.line(std::string("rational fit ") +
                 (fit.verdict == FitVerdict::Refusal ? "refused: " : "inconclusive: ") + fit.note);
        ctx.exit_code = 1;
        return;
    }
    res["fit"] = "success";
    res["form"] = form_json(*fit.form);
    DualityVerdict verdict = functional_check(*fit.form);
    json vj{{"r", verdict.r}, {"convention_note", verdict.convention_note}};
    ctx.line("closed form: " + fit.form->to_string());
    if (verdict.kind == DualityVerdict::Kind::Defect0) {
        vj["kind"] = "defect0";
        vj["defect"] = 0;
        vj["a"] = verdict.a;
        ctx.line("duality: defect 0, r = " + std::to_string(verdict.r) + ", a = " +
                 std::to_string(verdict.a));
    } else if (verdict.kind == DualityVerdict::Kind::Defect1) {
        vj["kind"] = "defect1";
        vj["defect"] = 1;
        vj["a"] = verdict.a;
        vj["second_equation_verified"] = verdict.second_equation_verified;
        if (verdict.delta_reduced) vj["delta"] = verdict.delta_reduced->to_string();
        else vj["delta_numerator"] = verdict.delta_num.to_string();
        ctx.line("duality: defect 1, r = " + std::to_string(verdict.r) + ", a = " +
                 std::to_string(verdict.a) +
                 (verdict.delta_reduced ? ", delta = " + verdict.delta_reduced->to_string() : ""));
        ctx.line("second equation delta(1/t) = (-t)^(r-1) t^(-a) delta(t): " +
                 std::string(verdict.second_equation_verified ? "verified" : "NOT verified"));
    } else {
        vj["kind"] = "none";
        ctx.line("no duality detected in the scan window");
        ctx.exit_code = 1;
    }
    ctx.warnings.push_back(verdict.convention_note);
    res["verdict"] = vj;
    ctx.machine["results"] = res;
}

void do_hochschild_predict(const SullivanAlgebra& a, const RunOptions& opt, CommandContext& ctx) {
    SciResult sci = sci_standard_form(a);
    if (!std::holds_alternative<SciCertificate>(sci)) {
        const HurewiczObstruction& obs = std::get<HurewiczObstruction>(sci);
        ctx.machine["results"] = json{{"sci", false}, {"obstruction", obstruction_json(obs, a)}};
        ctx.line("not sci; the Hochschild prediction needs the sci sphere decomposition");
        ctx.exit_code = 1;
        return;
    }
    const SciCertificate& cert = std::get<SciCertificate>(sci);
    CohomologyTable table = cohomology(a, opt.max_codegree);
    LaurentSeries series = hilbert_series(table);
    std::vector<int> denom;
    FitResult fit = fit_with_options(series, opt, &denom);
    if (fit.verdict != FitVerdict::Success) {
        ctx.machine["results"] = json{{"fit", "failed"}, {"note", fit.note}};
        ctx.line("rational fit failed: " + fit.note);
        ctx.exit_code = 1;
        return;
    }
    std::vector<int> spheres;
    for (const std::string& name : cert.fibre)
        spheres.push_back(a.generators().at(a.generators().require_index(name)).codegree);
    std::sort(spheres.begin(), spheres.end());
    RationalSeriesForm prediction = hochschild_series_prediction(*fit.form, spheres);
    ctx.machine["results"] = json{{"p_x", form_json(*fit.form)},
                                  {"sphere_codegrees", spheres},
                                  {"prediction", form_json(prediction)}};
    ctx.line("p_X form: " + fit.form->to_string());
    std::string sp = "sphere codegrees:";
    for (int n : spheres) sp += " " + std::to_string(n);
    ctx.line(sp);
    ctx.line("HH^*(X|KV) series prediction: " + prediction.to_string());
}

void do_verify(const SullivanAlgebra& a, const RunOptions& opt, CommandContext& ctx) {
    if (opt.certificate_text.empty())
        throw PreconditionError("verify requires --certificate with a machine report");
    json doc = json::parse(opt.certificate_text);
    json certificate;
    if (doc.contains("results") && doc["results"].contains("certificate"))
        certificate = doc["results"]["certificate"];
    else if (doc.contains("moves"))
        certificate = doc;
    else
        throw PreconditionError("no certificate found in the provided report");

    VerifyResult result;
    result.ok = true;
    SullivanAlgebra current = a;
    int step = 0;
    for (const json& mv : certificate["moves"]) {
        NciMove move;
        std::string kind = mv["kind"].get<std::string>();
        if (kind == "adjoin-odd") move.kind = NciMove::Kind::AdjoinOdd;
        else if (kind == "quotient-even") move.kind = NciMove::Kind::QuotientEven;
        else if (kind == "drop-odd") move.kind = NciMove::Kind::DropOdd;
        else if (kind == "change-of-variables") move.kind = NciMove::Kind::ChangeOfVariables;
        else throw PreconditionError("unknown move kind '" + kind + "'");
        move.gen = mv["gen"].get<std::string>();
        move.codegree = mv["codegree"].get<int>();
        std::string payload = mv.value("payload", "0");
        try {
            move.payload = payload == "0" ? Poly::zero(current.generators_ptr())
                                          : parse_poly(payload, current.generators_ptr());
            // Adjoining against a coboundary is permitted but flagged.
            if (move.kind == NciMove::Kind::AdjoinOdd && !move.payload.is_zero() &&
                is_coboundary(current, move.payload).is_coboundary())
                ctx.warnings.push_back("step " + std::to_string(step) + " adjoins the coboundary " +
                                       payload + " (permitted, flagged)");
            current = apply_move(current, move);
        } catch (const Error& e) {
            result.ok = false;
            result.failed_step = step;
            result.failure = e.what();
            break;
        }
        ++step;
    }
    if (result.ok && certificate.contains("final_snapshot")) {
        SullivanAlgebra expected = parse_model(certificate["final_snapshot"].get<std::string>());
        if (!(current == expected)) {
            result.ok = false;
            result.failure = "final snapshot differs from the replayed algebra";
        }
    }
    if (result.ok) {
        SciResult sci = sci_standard_form(current);
        if (!std::holds_alternative<SciCertificate>(sci)) {
            result.ok = false;
            result.failure = "replayed algebra does not pass the sci standard form";
        } else if (certificate.contains("final_codimension") &&
                   std::get<SciCertificate>(sci).codimension !=
                       certificate["final_codimension"].get<int>()) {
            result.ok = false;
            result.failure = "final codimension mismatch";
        } else if (certificate.contains("length_bound")) {
            int adjoins = 0, quotients = 0;
            for (const json& mv : certificate["moves"]) {
                std::string kind = mv["kind"].get<std::string>();
                if (kind == "adjoin-odd") ++adjoins;
                if (kind == "quotient-even") ++quotients;
            }
            int expected = adjoins + quotients + std::get<SciCertificate>(sci).codimension;
            if (certificate["length_bound"].get<int>() != expected) {
                result.ok = false;
                result.failure = "length accounting mismatch";
            }
        }
    }
    ctx.machine["results"] = json{{"verified", result.ok},
                                  {"failed_step", result.failed_step},
                                  {"failure", result.failure}};
    if (result.ok) {
        ctx.line("certificate verified");
    } else {
        ctx.line("certificate INVALID: " + result.failure +
                 (result.failed_step >= 0 ? " (step " + std::to_string(result.failed_step) + ")" : ""));
        ctx.exit_code = 1;
    }
}

}  // namespace

RunResult run(const std::string& command, const std::string& model_text, const RunOptions& options) {
    RunResult out;
    CommandContext ctx;
    ctx.machine["command"] = command;
    ctx.machine["parameters"] = json{{"max_codegree", options.max_codegree},
                                     {"max_degree", options.max_degree},
                                     {"denominator", options.denominator_auto
                                                         ? json("auto")
                                                         : json(options.denominator)},
                                     {"format", options.format},
                                     {"seed", options.seed}};
    try {
        SullivanAlgebra algebra = parse_model(model_text);
        ctx.machine["input"] =
            json{{"algebra", algebra.name()}, {"digest", input_digest(model_text)}};
        ctx.line("algebra " + algebra.name() + " (digest " + input_digest(model_text) + ")");

        if (command == "cohomology") do_cohomology(algebra, options, ctx);
        else if (command == "hilbert") do_hilbert(algebra, options, ctx);
        else if (command == "presentation") do_presentation(algebra, options, ctx);
        else if (command == "classify") do_classify(algebra, options, ctx);
        else if (command == "standard-form") do_standard_form(algebra, options, ctx);
        else if (command == "unravel") do_unravel(algebra, options, ctx);
        else if (command == "loop-homology") do_loop_homology(algebra, options, ctx);
        else if (command == "duality") do_duality(algebra, options, ctx);
        else if (command == "hochschild-predict") do_hochschild_predict(algebra, options, ctx);
        else if (command == "verify") do_verify(algebra, options, ctx);
        else throw PreconditionError("unknown command '" + command + "'");
    } catch (const ParseError& e) {
        ctx.machine["error"] = e.what();
        ctx.line(std::string("input error: ") + e.what());
        ctx.exit_code = 2;
    } catch (const PreconditionError& e) {
        ctx.machine["error"] = e.what();
        ctx.line(std::string("input error: ") + e.what());
        ctx.exit_code = 2;
    } catch (const json::exception& e) {
        ctx.machine["error"] = std::string("malformed certificate: ") + e.what();
        ctx.line(std::string("input error: malformed certificate: ") + e.what());
        ctx.exit_code = 2;
    }
    ctx.machine["warnings"] = ctx.warnings;
    ctx.machine["status"] = ctx.exit_code;

    out.exit_code = ctx.exit_code;
    out.machine = ctx.machine.dump(2) + "\n";
    out.text = ctx.text;
    return out;
}

}  // namespace sullivan
