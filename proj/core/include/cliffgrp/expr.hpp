#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cliffgrp/multivector.hpp"

namespace cliffgrp {

/// Syntax error with the 0-based offset of the offending character.
struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

/// A blade index outside 1..n.
struct IndexOutOfRange : ParseError {
  IndexOutOfRange(std::size_t pos, int index, int n)
      : ParseError(pos, "blade index " + std::to_string(index) +
                            " outside 1.." + std::to_string(n)),
        index(index) {}
  int index;
};

/// Grammar:
///   expr  := term (('+'|'-') term)*
///   term  := coeff ('*'? blade)? | blade
///   coeff := rat | rat sign rat 'i' | rat 'i'
///   rat   := int ('/' int)?
///   blade := 'e' digits | 'e[' int (',' int)* ']'
/// Blade indices must be strictly increasing; digit-form indices are single
/// digits. Imaginary coefficients require a complex signature. Repeated
/// blades are summed.
Multivector parse_multivector(std::string_view text, const Signature& sig);

/// Canonical text: terms in (grade, mask) order, parse(format(u)) == u.
std::string format_multivector(const Multivector& u);

/// "3", "-3/2", "1/2+1/2i"; same form used in matrix JSON output.
std::string format_scalar(const Scalar& c);

}  // namespace cliffgrp
