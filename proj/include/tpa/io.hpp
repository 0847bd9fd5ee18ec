#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/axioms.hpp"
#include "tpa/search.hpp"
#include "tpa/solve.hpp"

namespace tpa {

// Thrown on malformed input: invalid JSON, schema violations, and values the
// algebra layer rejects. Messages name the offending path ("ops[2].table[0]").
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Parses a "tpa-algebra/1" document into a validated bundle. Scalars travel
// as strings so exact values survive any JSON implementation; a number in
// scalar position is rejected. Every op goes through the normalizer, so
// symmetry-inconsistent tables and out-of-range indices fail here.
AlgebraBundle parse_algebra_file(const std::string& text);

// Serializes a bundle as a "tpa-algebra/1" document. Key order, entry order,
// and scalar spelling are canonical: emit(parse(emit(b))) == emit(b).
std::string emit_algebra_file(const AlgebraBundle& bundle);

// Serializes check results and search reports as a "tpa-report/1" document.
// Witnesses carry the tuple and both sides, enough to re-verify offline.
std::string emit_report(const std::string& subject,
                        const std::vector<CheckReport>& checks,
                        const std::vector<SearchReport>& searches = {});

// Serializes a solution space as a "tpa-report/1" document. Map bases print
// as matrices, product bases as op tables.
std::string emit_solution_space(const std::string& subject,
                                const SolutionSpace& space);

}  // namespace tpa
