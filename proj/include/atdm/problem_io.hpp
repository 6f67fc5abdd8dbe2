#pragma once

#include "atdm/problem.hpp"

#include <string>

namespace atdm {

/// JSON problem-file format. Series literals are lists of
///   {"coeff": "p/q", "xpow": m, "tpow": {"a": "p/q", "b": "p/q"},
///    "gnum": [{a,b}...], "gden": [...]}
/// with gnum/gden optional; see the shipped benchmark files for the full
/// shape. Throws ParseError on malformed input.
ProblemSpec problem_from_json(const std::string& text);
ProblemSpec load_problem(const std::string& path);

std::string problem_to_json(const ProblemSpec& spec);

/// Stable FNV-1a hash of the serialized spec, for table metadata.
std::string spec_hash(const ProblemSpec& spec);

}  // namespace atdm
