#pragma once

#include <string>

#include "sullivan/algebra.hpp"

namespace sullivan {

// Model description language:
//
//   file     := "algebra" IDENT NEWLINE (genDecl | diffDecl)*
//   genDecl  := "gen" IDENT INT NEWLINE            # name, codegree >= 2
//   diffDecl := "d" IDENT "=" poly NEWLINE
//   poly     := term (("+"|"-") term)*
//   term     := [RATIONAL "*"] factor ("*" factor)*
//   factor   := IDENT ["^" INT]
//   RATIONAL := INT ["/" INT]
//
// Comments start with '#'. An omitted diffDecl means zero differential.
// Input products are interpreted against the canonical monomial order
// (reordering factors produces the Koszul sign). Lexical and syntactic
// errors throw ParseError with line/column; semantic errors (unknown
// generator, wrong differential codegree, d^2 != 0, minimality violations)
// throw PreconditionError naming the witness.
SullivanAlgebra parse_model(const std::string& text);

// Parses a polynomial in the term grammar over an existing universe (used by
// report round-trips).
Poly parse_poly(const std::string& text, const GeneratorSetPtr& gens);

// Canonical model text; reparses to an identical algebra.
std::string emit_model(const SullivanAlgebra& a);

}  // namespace sullivan
