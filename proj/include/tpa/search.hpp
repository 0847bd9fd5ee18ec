#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/axioms.hpp"
#include "tpa/construct.hpp"

namespace tpa {

// Seeded 64-bit generator (splitmix). The exact update is part of the
// interface: seeds must keep their meaning across versions.
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
// bounded(n) is next() % n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t bounded(std::uint64_t n);  // n > 0

 private:
  std::uint64_t state_;
};

struct SearchHit {
  long long index = 0;  // position in enumeration order
  LinearMap map;
};

struct SearchCounterexample {
  std::string instance;  // which object failed, e.g. "level 1 (arity 3)"
  Axiom axiom = Axiom::FundamentalIdentity;
  ViolationWitness witness;
};

// Outcome of a search or a conjecture run. Every hit has been replayed
// through the axiom engine before the report is returned, and every
// counterexample witness re-evaluates to the recorded sides.
struct SearchReport {
  std::string target;
  std::uint64_t seed = 0;
  long long candidates = 0;
  bool partial_coverage = false;  // enumeration stopped at the budget
  std::vector<SearchHit> hits;
  std::vector<SearchCounterexample> counterexamples;
  std::string verdict;  // all-pass | counterexample-found | no-candidates
};

struct EnumBudget {
  long long max_candidates = 2000000;
  int max_dim = 3;
};

// Exhaustive enumeration over GF(p) of the d x d matrices f with f o f = Id,
// f(x*y) = f(x)*f(y) and f([x,y]) = -[f(x),f(y)], for the bundle's ops
// "mul" and "bracket". Candidates are visited in row-major lexicographic
// order of their residue entries; if p^(d*d) exceeds the budget the report
// is flagged partial instead of failing.
SearchReport find_involutive_antimorphisms(const AlgebraBundle& bundle,
                                           const EnumBudget& budget = {});

// Instance supply for property tests.
//   kind "catalog":        the classification entries; seed unused.
//   kind "truncated-poly": quotients k[x_i]/(x_i^cap_i) with the bracket of
//                          a seeded nonnegative integer combination D of the
//                          Euler maps; emits `count` bundles carrying D.
//   kind "solver-family":  products drawn coordinate-wise from `pool`
//                          against the transposed-compatible space of
//                          `bracket`.
// Every emitted bundle passes transposed-poisson, re-verified before
// emission; candidates that fail are skipped (catalog entry 2d-nonabelian-c
// is, and a solver-family draw whose bracket breaks Jacobi would be). The
// drawn data is recorded in bundle metadata. Identical seeds give identical
// lists.
struct GeneratorSpec {
  std::string kind;
  Field field = Field::rationals();
  std::vector<int> caps;    // truncated-poly
  int count = 20;           // seeded kinds: bundles to draw
  MultiLinearOp bracket;    // solver-family
  std::vector<Scalar> pool; // solver-family coordinate values
};

std::vector<AlgebraBundle> sample_tpa_instances(const GeneratorSpec& spec,
                                                std::uint64_t seed);

// Iterates nlie_ladder_step from the instance's n-ary bracket and, at each
// level, checks the fundamental identity, the factor-(n+1) transposed rule,
// and that D still derives the new bracket. The first failing identity is
// recorded as a counterexample (with a re-verified witness) and stops the
// climb; otherwise the verdict is all-pass. The instance must satisfy the
// n-ary transposed profile; budget violations surface as the ladder step's
// errors.
SearchReport test_conjecture_ladder(const AlgebraBundle& instance, int levels,
                                    const std::string& mul_name = "mul",
                                    const std::string& nary_name = "bracket",
                                    const std::string& map_name = "D",
                                    const LadderLimits& limits = {});

}  // namespace tpa
