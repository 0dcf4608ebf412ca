// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#ifndef TILESYM_TESTS_PARSE_DETAIL_HPP_
#define TILESYM_TESTS_PARSE_DETAIL_HPP_

#include <string_view>
#include <vector>

#include "tilesym/closure.hpp"

namespace tilesym::oracle {

// Linear form in two named variables; the result stores v1 in ca, v2 in cb.
AffineForm ParseLinear(std::string_view text, char v1, char v2);

// Splits at separators outside () and []. With keep_separator the
// separator starts the next piece.
std::vector<std::string_view> SplitTopLevel(std::string_view text,
                                            std::string_view separators,
                                            bool keep_separator);

std::string_view Trim(std::string_view s);

// "(x, y)".
AffinePoint ParseAffinePointText(std::string_view text);

}  // namespace tilesym::oracle

#endif  // TILESYM_TESTS_PARSE_DETAIL_HPP_
