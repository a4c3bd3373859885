#ifndef UNIAFF_IO_HPP
#define UNIAFF_IO_HPP

#include <stdexcept>
#include <string>

#include "uniaff/engine.hpp"

namespace uniaff {

/// Parse failure with location context (field path or line number).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One problem: an algebra with designated Levi data and the element
/// generating H.
struct ProblemInstance {
  std::string name;
  LieAlgebra algebra;
  LeviData levi_data;
  Element element;
};

/// Reads the one-algebra-per-file document:
///   { "dim": int, "basis": [names],
///     "brackets": { "i,j": [[k, "p/q"], ...], ... },
///     "levi": [indices], "nilradical": [indices],
///     "element": ["p/q", ...] }
/// Indices are 0-based; only pairs i < j may appear; omitted pairs mean
/// a zero bracket. Unknown keys are rejected.
ProblemInstance parse_problem_text(const std::string& text, const std::string& name);
ProblemInstance parse_problem_file(const std::string& path);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);
Certificate certificate_from_file(const std::string& path);

/// Trace document mirroring the per-level records, rationals as "p/q".
std::string trace_to_json(const Verdict& verdict);

/// Element as a readable combination of basis names, e.g. "e - 1/2 z".
std::string format_element(const LieAlgebra& g, const Element& x);

/// Per-level narrative of a decision.
std::string explain_text(const LieAlgebra& g, const Verdict& verdict);

}  // namespace uniaff

#endif
