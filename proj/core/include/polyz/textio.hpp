#pragma once

#include "polyz/groups.hpp"
#include "polyz/laurent.hpp"

#include <string>
#include <vector>

namespace polyz {

// "t^-1 - 2 + 3*t^2": terms by increasing exponent, zero rendered as "0"
std::string render_laurent(const LaurentPoly& p);

// Parses the grammar emitted by render_laurent (whitespace-insensitive);
// coefficients may be multi-digit and signed, "*" between coefficient and
// "t" is optional. Throws error on malformed input.
LaurentPoly parse_laurent(const std::string& text);

// "t x t^-1 y^-5"; empty word rendered as "1"
std::string render_word(const Word& w, const std::vector<std::string>& names);

// Parses "t x t^-1 y^-5" against the generator name list; inverse of
// render_word. Throws error on unknown generators or malformed syllables.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

// One relator per line, generators listed first: "<t, x | t x t^-1 x>"
std::string render_presentation(const Presentation& p);

} // namespace polyz
