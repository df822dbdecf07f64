#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sullivan/cohomology.hpp"
#include "sullivan/moves.hpp"
#include "sullivan/series.hpp"

namespace sullivan {

// Evidence that the model admits the standard sci form: generators processed
// from the top codegree down, each odd one stripped into the fibre, each even
// one made a cocycle by a Hurewicz-witness change of variables and moved to
// the base. Replaying just the isomorphisms on the input yields an algebra
// with d(V^even) = 0 and unchanged cohomology.
struct SciCertificate {
    struct Step {
        enum class Kind { StripOdd, ChangeAndStripEven } kind;
        std::string gen;
        int codegree = 0;
        Poly witness;  // even steps: g with d(x+g) = 0; unused for odd steps
    };
    std::vector<Step> steps;        // processing order, top codegree first
    std::vector<std::string> base;  // even generators
    std::vector<std::string> fibre;  // odd generators
    int codimension = 0;            // = |fibre| = dim V^odd
};

// Refusal at an even generator: its differential is not a coboundary of
// decomposables, certified by a functional annihilating d((Lambda^{>=2}V)^s)
// and nonzero on dx.
struct HurewiczObstruction {
    std::string gen;
    int codegree = 0;
    Poly differential;
    SparseVec refusal;               // functional over basis(codegree+1) columns
    std::vector<Monomial> functional_basis;
};

using SciResult = std::variant<SciCertificate, HurewiczObstruction>;

bool classify_regular(const SullivanAlgebra& a);

SciResult sci_standard_form(const SullivanAlgebra& a);

// Applies the certificate's recorded isomorphisms (only) to the input,
// producing the d(V^even) = 0 normal form; an isomorphic algebra.
SullivanAlgebra replay_normal_form(const SullivanAlgebra& a, const SciCertificate& cert);

// One-pass soundness check of an obstruction against the model.
bool verify_obstruction(const SullivanAlgebra& a, const HurewiczObstruction& obs);

// a = sum over even base generators (|v| - 1) minus sum over odd fibre |x|.
long gorenstein_shift(const SullivanAlgebra& a, const SciCertificate& cert);

// Growth-condition fragment: on a certificate, gci with g-codimension
// dim V^odd cross-checked against the loop-series window; on an obstruction,
// gci is false (the surjectivity failure certifies non-Noetherian cohomology
// while the homotopy is finite dimensional by construction).
struct GciFragment {
    bool gci = false;
    int g_codimension = -1;
    int window_growth_degree = -2;  // -2: inconclusive window
    bool cross_check_ok = true;
    std::string note;
};
GciFragment gci_report(const SullivanAlgebra& a, const SciResult& sci, int max_loop_degree = 24);

enum class Tri { Yes, No, Unknown };

// Poincare duality of a finite cohomology: symmetric dimensions and a
// nondegenerate cup pairing into the top class. Inconclusive when H does not
// vanish with margin inside the window.
Tri pd_check(const CohomologyTable& table, int formal_dim);

struct ClassificationReport {
    bool valid = false;
    std::vector<std::string> validation_problems;
    bool minimal = false;
    bool pure = false;
    bool even_cocycle_only = false;
    bool regular = false;
    bool sci = false;
    std::optional<SciCertificate> certificate;
    std::optional<HurewiczObstruction> obstruction;
    int codimension = -1;               // when sci
    bool gci = false;                   // = sci for finite-V minimal models
    int g_codimension = -1;             // dim V^odd, cross-checked against loop growth
    int loop_growth_degree = -2;        // from the loop series window
    Tri noetherian = Tri::Unknown;      // certified by the sci test
    Tri zci = Tri::Unknown;             // pure sci => yes; not sci => no
    Tri eci = Tri::Unknown;             // equivalent to sci
    Tri bci = Tri::Unknown;
    Tri qci = Tri::Unknown;
    bool elliptic_heuristic = false;    // H vanishes in-window with margin; heuristic
    std::optional<long> gorenstein_shift_value;  // when sci
    int nci_length_bound = -1;          // delegated to the unraveler
    std::vector<std::string> warnings;
};

// Orchestrates the full classification at the given truncation bounds; the
// nci length bound is filled by the unraveler.
ClassificationReport classify(const SullivanAlgebra& a, int max_codegree, int max_loop_degree);

}  // namespace sullivan
