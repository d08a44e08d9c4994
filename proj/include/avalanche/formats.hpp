#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "avalanche/anf.hpp"
#include "avalanche/blocks.hpp"
#include "avalanche/boolean_function.hpp"

namespace avalanche {

/// Malformed input text.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Variable count outside the supported 2..24 window.
struct range_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truth-table hex: "n=<k>:" then 2^k/4 hex digits, first table bit as the
// high bit of the first digit.
std::string to_hex(const BooleanFunction& f);
BooleanFunction parse_hex(std::string_view text);

// ANF text: terms joined by '+', each '1' or a product of x<decimal> tokens;
// '*' separators and whitespace are ignored. The zero function prints "0".
std::string to_anf_string(const Anf& a);
Anf parse_anf_string(std::string_view text, int n);

// Block string: letters from {A,B,C,D,U,V,X,Y}, '~' prefix = complement,
// whitespace ignored. Printed with single spaces between tokens.
std::string to_block_string(const BlockSequence& bs);
BlockSequence parse_block_string(std::string_view text);

}  // namespace avalanche
