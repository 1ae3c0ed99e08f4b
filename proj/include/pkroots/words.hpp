#pragma once

#include "pkroots/group_ctx.hpp"

namespace pkroots {

// Parse an element expression against a validated context. Grammar:
//   expr   := term ('*' term)*
//   term   := atom ('^' integer)?
//   atom   := 'e' | 'g'<index> | 'n(' scalar (',' scalar)* ')' | matrix JSON
// 'g1' is the first generator; n(...) fills the unipotent support
// coordinates in row-major position order; a '[[...],...]' literal is an
// explicit matrix. Scalars are integers or p/q.
Matrix parse_element(const TriangularGroup& ctx, const std::string& text);

} // namespace pkroots
