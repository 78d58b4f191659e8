// format.hpp
//
// Parsers for the exact text formats rendered by to_string: "n", "n/d",
// "a+bi", "a-bi", "a+b√2", "(p1,p2,p3,p4)". Round-tripping any value
// through its text form is the identity. Malformed input throws
// std::invalid_argument.

#pragma once

#include <string_view>

#include "deutsch/gaussian.hpp"
#include "deutsch/quantum.hpp"
#include "deutsch/surd.hpp"

namespace deutsch {

Rat parse_rat(std::string_view text);
GaussRat parse_gauss(std::string_view text);
Surd2 parse_surd(std::string_view text);
Distribution4 parse_distribution(std::string_view text);

}  // namespace deutsch
