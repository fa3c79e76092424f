#ifndef SPHSPEC_SPECSTRING_HPP
#define SPHSPEC_SPECSTRING_HPP

#include <string>
#include <variant>

#include "sphspec/lens.hpp"
#include "sphspec/orbifolds.hpp"
#include "sphspec/spaceforms.hpp"

namespace sphspec {

/// Textual object grammar (the single place it is defined):
///
///   lens      := "L" ["_" d] "(" q ";" items ")"
///   items     := item { "," item }           (spaces allowed around items)
///   item      := ["-"] int ["^" mult]        ("a^m" = m copies of a)
///   orbifold  := "orbifold:" kind ":d=" d ":" int { "," int }
///   kind      := "cyclic" N | "klein4" | "sym3"
///   spaceform := "spaceform:" name ":m=" m [":h=" h]
///   name      := "Q8" | "P12" | "Q16" | "P20"
///
/// A lens without "_d" is the (2n-1)-dimensional space of its n parameters.
/// Errors are reported as ParseError with the byte offset of the problem.
using ParsedSpec = std::variant<LensParams, SmallGroupClass, FpfGroupSpec>;

ParsedSpec parse_spec(const std::string& text);

std::string print_spec(const ParsedSpec& spec);

} // namespace sphspec

#endif
