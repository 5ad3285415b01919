#pragma once

#include "monolab/monotonicity.hpp"
#include "monolab/subdiff.hpp"

#include <cstdint>

namespace monolab {

// One named predicate query with an optional modulus argument.
struct Expectation {
  std::string predicate;
  std::optional<Rat> kappa;
  bool expected = true;
};

struct CorpusCase {
  std::string name;
  std::optional<PolyOperator> op;
  std::optional<PwFunction1D> fn;
  // anchor: graph point for operators, (x, subgradient) for functions
  GraphPoint anchor{{rat(0)}, {rat(0)}};
  std::vector<Expectation> expected;
  // pinned cases are the regression gate: a mismatch fails the whole run
  bool pinned = true;
};

struct PredicateVector {
  std::string case_name;
  Rat kappa;
  Verdict a, b, c, d;

  bool agreement() const {
    return a.holds == b.holds && b.holds == c.holds && c.holds == d.holds;
  }
};

std::vector<CorpusCase> builtin_corpus();

// Whether the chosen derivative cone is kappa-lower-definite at every sampled
// graph point of some schedule window around p.
Verdict definite_around(const PolyOperator& F, const GraphPoint& p,
                        const Rat& kappa, DerivKind kind,
                        const WindowSchedule& sched);

// The four equivalent characterizations of strong local maximal monotonicity,
// evaluated independently. kappa must be positive.
PredicateVector strong_characterization(const PolyOperator& F, const GraphPoint& p,
                                     const Rat& kappa,
                                     const WindowSchedule& sched = {});

// Batched form of strong_characterization: the kappa-independent components
// (hypomonotone maximality, metric regularity, closedness, inner
// semicontinuity) are evaluated once and shared across all moduli.
std::vector<PredicateVector> strong_characterization_vectors(const PolyOperator& F,
                                               const GraphPoint& p,
                                               const std::vector<Rat>& kappas,
                                               const WindowSchedule& sched = {});

// Signed-modulus variant: shift maximality on one side, derivative
// definiteness plus hypomonotone maximality on the other. Fills a and b only;
// c and d mirror them so agreement() applies unchanged.
PredicateVector signed_characterization(const PolyOperator& F,
                                       const GraphPoint& p, const Rat& kappa,
                                       const WindowSchedule& sched = {});

// Evaluate one named predicate of a corpus case.
Verdict evaluate_predicate(const CorpusCase& c, const Expectation& e);

struct CaseResult {
  std::string case_name;
  std::string predicate;
  bool expected;
  bool actual;
  bool pinned;
};

// Runs every expectation of every case; mismatches are collected, never thrown.
std::vector<CaseResult> run_corpus(const std::vector<CorpusCase>& corpus);

struct FuzzParams {
  bool force_monotone = false;
  bool mutate_gap = false;
  bool allow_vertical = true;
  int max_pieces = 4;
};

// Deterministic piecewise-affine graphs on a half-integer lattice.
std::vector<PolyOperator> fuzz_operators(std::uint64_t seed, int count,
                                         const FuzzParams& params = {});

// Breakpoint and interior anchors of a graph, all exact graph points.
std::vector<GraphPoint> graph_anchors(const PolyOperator& F);

struct EquivReport {
  bool pass = true;
  std::vector<std::string> failures;
};

EquivReport assert_equivalences(const std::vector<PredicateVector>& vectors);

// Worker cap from MONOLAB_THREADS (>=1); hardware concurrency by default.
int thread_cap();

// Index-parallel map with deterministic output order.
void parallel_for(size_t count, const std::function<void(size_t)>& body);

}  // namespace monolab
