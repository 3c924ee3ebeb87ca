#pragma once

#include <string>
#include <string_view>

#include "lts.hpp"

namespace influence {

// Aldebaran interchange format. First line `des (I, T, N)`, then one
// `(from, "label", to)` or `(from, i, to)` per transition. The reader is
// whitespace tolerant; any label that is not one of the four recognized
// shapes (tau / BOOL v / ASSERT v / ASSIGN t [s]) is a hard error.
Lts read_aut(std::string_view text);

// Canonical form: single spaces after commas, transitions sorted by source
// then label then target, LF line endings, trailing newline.
std::string write_aut(const Lts& lts);

}  // namespace influence
