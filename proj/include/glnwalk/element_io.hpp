#pragma once

#include "glnwalk/ugln.hpp"

#include <string_view>

namespace glnwalk::io {

// Element grammar: `E[i,j]` and `Psi[k,M]` atoms, `+`, `-`, `*`, `^`,
// integer/rational/symbol coefficients, parentheses; juxtaposition
// multiplies. rank <= 0 infers the ambient rank from the largest index.
ugln::NCElement parse_element(std::string_view text, int rank = 0);

}  // namespace glnwalk::io
