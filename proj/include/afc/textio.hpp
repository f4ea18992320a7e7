#pragma once

#include <stdexcept>
#include <string>

#include "afc/ambc.hpp"
#include "afc/components.hpp"

namespace afc {

// Malformed input text; domain violations raise std::domain_error instead.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// "[2,1,4,3]" -- ASCII minus, no spaces on output; parsing accepts
// whitespace between tokens.
std::string to_string(const AffinePerm& w);
AffinePerm parse_window(const std::string& text);

// "{1,4|2,6|3,5}"
std::string to_string(const Tabloid& x);
Tabloid parse_tabloid(const std::string& text);

// "(-2,0,2)"
std::string to_string(const std::vector<int64_t>& v);
std::vector<int64_t> parse_int_vector(const std::string& text);

// "({1,4|2,6|3,5},{1,4|2,6|3,5},(-2,0,2))"
std::string to_string(const AmbcTriple& t);
AmbcTriple parse_triple(const std::string& text);

// "w:[1,2,3,4,5,6];c:(5,2,0)"; the shorter "[...]:( ... )" is accepted.
std::string to_string(const ComponentLabel& label);
ComponentLabel parse_label(const std::string& text, const RectShape& shape);

// "2x3" = rows of length 2, 3 rows.
std::string to_string(const RectShape& shape);
RectShape parse_shape(const std::string& text);

}  // namespace afc
