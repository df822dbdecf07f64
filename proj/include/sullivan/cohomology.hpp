#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sullivan/algebra.hpp"
#include "sullivan/matrix.hpp"

namespace sullivan {

// Degree-truncated cohomology of a Sullivan algebra: exact dimensions, ranks
// of the differential, and deterministic cocycle representatives (reduced
// echelon against boundaries in the canonical monomial order).
class CohomologyTable {
public:
    int max_codegree() const { return max_codegree_; }
    int dim(int n) const;
    long rank_d(int n) const;  // rank of d_n, 0 outside the window
    const std::vector<Poly>& representatives(int n) const;

    // Reduces a cocycle of codegree n <= max against boundaries; the reduced
    // poly is the canonical class form, coords express it in the
    // representative basis of H^n.
    struct ClassExpr {
        Poly reduced;
        std::vector<Rat> coords;
    };
    ClassExpr reduce_class(const Poly& cocycle) const;

    friend CohomologyTable cohomology(const SullivanAlgebra& algebra, int max_codegree);

private:
    struct Level {
        std::vector<Monomial> basis;
        RowSpan boundaries{0};
        RowSpan rep_span{0};
        std::vector<Poly> reps;
        long rank_d = 0;  // rank of d at this codegree
        int dim = 0;
    };
    const Level& level(int n) const;

    int max_codegree_ = -1;
    GeneratorSetPtr gens_;
    std::shared_ptr<std::vector<Level>> levels_;
};

CohomologyTable cohomology(const SullivanAlgebra& algebra, int max_codegree);

// Exact solve of d(g) = f over basis(|f|-1), or a certified refusal: a linear
// functional on the codegree-|f| monomial basis annihilating im(d) and
// nonzero on f. Exactly one of witness/refusal is set.
struct CoboundaryResult {
    std::optional<Poly> witness;
    std::optional<SparseVec> refusal;      // functional over basis(|f|) columns
    int functional_codegree = -1;
    bool is_coboundary() const { return witness.has_value(); }
};
CoboundaryResult is_coboundary(const SullivanAlgebra& algebra, const Poly& f);

// Cup product of two classes, reduced against boundaries and expressed in the
// representative basis of H^{|a|+|b|}.
CohomologyTable::ClassExpr cup_product(const SullivanAlgebra& algebra, const CohomologyTable& table,
                                       const Poly& alpha, const Poly& beta);

// The codegree-n slice of the dual Hurewicz image: linear combinations x of
// generators with d(x+g) = 0 for some decomposable g, with explicit witnesses.
struct HurewiczImage {
    int codegree = 0;
    struct Entry {
        Poly combination;  // element of span(V^n)
        Poly witness;      // g with d(combination + witness) = 0
    };
    std::vector<Entry> image_basis;
    int dim() const { return static_cast<int>(image_basis.size()); }
};
HurewiczImage hurewicz_image(const SullivanAlgebra& algebra, int n);

// Truncated ring presentation of H^*: indecomposable generators and minimal
// relations up to the bound, plus a stability heuristic. Squares of odd
// presentation generators vanish identically in the free CGA; they are listed
// as explicit relations (classical presentation style) but never count as
// stability events.
struct TruncatedPresentation {
    struct Gen {
        std::string name;  // g1, g2, ... in discovery order
        int codegree = 0;
        Poly representative;
    };
    struct Rel {
        int codegree = 0;
        std::string display;  // polynomial in the presentation generators
        bool odd_square = false;
    };
    std::vector<Gen> generators;
    std::vector<Rel> relations;
    bool stable = false;
    int bound = 0;
    std::string note;  // stability is heuristic; says so
};
TruncatedPresentation presentation(const SullivanAlgebra& algebra, const CohomologyTable& table,
                                   int max_codegree);

}  // namespace sullivan
