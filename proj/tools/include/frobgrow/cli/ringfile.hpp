#pragma once

#include <string>

#include "frobgrow/decomposer.hpp"

namespace frobgrow::cli {

/// Reads a YAML ring file:
///
///   prime: 3
///   variables: [{name: t, weight: 0}, {name: x, weight: 1}, {name: y, weight: 1}]
///   relations: ["x*y*(x-y)*(x-t*y)"]
///   ideal: [x, y]
///   minimal_prime: [x, y]     # optional
///   family: katzman           # optional, defaults to custom
///
/// Errors are InputError / ParseError carrying the file line.
FamilySpec load_ring_file(const std::string& path);
FamilySpec parse_ring_text(const std::string& text, const std::string& origin = "<string>");

}  // namespace frobgrow::cli
