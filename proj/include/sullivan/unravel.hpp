#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sullivan/classify.hpp"

namespace sullivan {

// One unravelling move. Adjoin and quotient moves pay for the length bound;
// change-of-variables moves are isomorphisms and cost nothing. The
// change-of-variables replay rewrites other differentials through the
// isomorphism (general form), which coincides with the restricted move
// whenever the generator occurs nowhere else.
struct NciMove {
    enum class Kind { AdjoinOdd, QuotientEven, DropOdd, ChangeOfVariables } kind;
    std::string gen;   // generator created (adjoin) or acted on
    int codegree = 0;  // codegree of that generator
    Poly payload;      // adjoin: the cocycle f; change: g with d(x+g) = 0
};

struct NciCertificate {
    std::vector<NciMove> moves;
    int adjoin_count = 0;
    int quotient_count = 0;
    int final_codimension = 0;
    int length_bound = 0;  // adjoin_count + quotient_count + final_codimension
    std::optional<SullivanAlgebra> final_snapshot;
    std::optional<SciCertificate> final_sci;
};

// Makes the minimal-codegree even generator a cocycle: solve d(u) = d(a) in
// the odd-generated subalgebra below |a|, adjoining odd generators to kill the
// even classes that obstruct the solve (greedy candidates with one-step
// lookahead, falling back to the exhaustive bottom-up kill). Returns the moves
// and the rewritten algebra; empty move list when d(a) = 0 already.
std::pair<std::vector<NciMove>, SullivanAlgebra> eliminate_minimal_even(const SullivanAlgebra& a);

// Unravels to an algebra in sci standard form, emitting a replayable
// certificate with the length accounting of the move calculus.
NciCertificate nci_unravel(const SullivanAlgebra& a);

// Applies one move, checking its preconditions; throws PreconditionError.
SullivanAlgebra apply_move(const SullivanAlgebra& a, const NciMove& move);

struct VerifyResult {
    bool ok = false;
    int failed_step = -1;  // -1: final snapshot / accounting
    std::string failure;
};
VerifyResult verify_certificate(const SullivanAlgebra& a, const NciCertificate& cert);

}  // namespace sullivan
