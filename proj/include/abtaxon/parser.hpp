#pragma once

#include <string>
#include <string_view>

#include "abtaxon/group_expr.hpp"

namespace abtaxon {

// Grammar (whitespace-insensitive; "(+)" and the infinity sign are accepted
// as Unicode aliases for "+" and "inf" on input, never emitted):
//
//   expr := term ("+" term)* | "0"
//   term := atom ("^" mult)?
//   atom := "Z" | "Q" | "Z(" nat "^" nat ")" | "Z(" nat "^inf)" | "Z(" nat ")"
//         | "B(" nat ")" | "TF(" nat (";" nat ("," nat)*)? ")"
//   mult := nat >= 1 | "w" | "w" nat     -- "w" = aleph_0, "wk" = aleph_k
//
// "Z(p)" abbreviates "Z(p^1)" and is the canonical spelling for order-p
// cyclics.  Naturals are capped at 999999999.

/// Parse and normalize.  Throws ParseError with a position for syntax and
/// validation failures (non-prime base, zero exponent/rank/multiplicity).
GroupExpr parse_group_expr(std::string_view text);

/// Canonical text; parse(render(g)) == g.  The zero group renders as "0".
std::string render(const GroupExpr& g);

/// Canonical text of a single term ("Z(2^3)^5").
std::string render_term(const Term& t);

}  // namespace abtaxon
