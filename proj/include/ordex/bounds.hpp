#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ordex/pattern_graph.hpp"

namespace ordex {

using Rational = boost::rational<int>;

/// n^n_exp (log n)^log_exp, times 2^{O(sqrt(log n log log n))} when subexp.
struct BoundTerm {
  Rational n_exp{1};
  int log_exp = 0;
  bool subexp = false;

  std::string to_string() const;
  friend bool operator==(const BoundTerm&, const BoundTerm&) = default;
};

// Asymptotic order of growth: n_exp first, then the subexponential factor,
// then the log power. Returns <0, 0, >0.
int compare_growth(const BoundTerm& a, const BoundTerm& b);

// a >= b in every coordinate.
bool covers(const BoundTerm& a, const BoundTerm& b);

enum class Direction { Upper, Lower };

/// Max over terms, constants suppressed. Terms form an antichain under the
/// coordinatewise order on (n_exp, log_exp, subexp) and are kept sorted.
class AsymptoticBound {
 public:
  AsymptoticBound(Direction direction, std::vector<BoundTerm> terms);

  Direction direction() const { return direction_; }
  const std::vector<BoundTerm>& terms() const { return terms_; }
  // Largest term under compare_growth.
  const BoundTerm& dominant() const;

  AsymptoticBound merged(const AsymptoticBound& other) const;
  AsymptoticBound plus(const BoundTerm& term) const;
  AsymptoticBound times_log(int power) const;

  std::string to_string() const;
  friend bool operator==(const AsymptoticBound&, const AsymptoticBound&) = default;

 private:
  Direction direction_;
  std::vector<BoundTerm> terms_;
};

/// One rule application. `from` and `to` are compact canonical forms; the
/// rule is applied to the `variant` image of `from`. Base steps ("base.*",
/// "lower.*") record in `to` the known pattern that `from` was compared with.
struct DerivationStep {
  std::string rule;
  std::string variant;
  std::string from;
  std::string to;
  std::vector<int> params;
  std::string transform;
};

struct Derivation {
  std::string pattern;  // compact form of the pattern the search started from
  std::vector<DerivationStep> steps;
  std::string terminal;
  bool no_derivation = false;
  bool uses_rule_c = false;
};

struct BoundResult {
  AsymptoticBound bound;
  Derivation derivation;
};

enum class PatternClass { Quadratic, Bipartite, Sailboat };

struct Classification {
  PatternClass kind = PatternClass::Bipartite;
  int chi = 2;
  // Quadratic, non-cyclic: ex is (density + o(1)) n^2 with density (1 - 1/(chi-1))/2.
  std::optional<Rational> density;

  std::string name() const;
};

Classification classify_pattern(const PatternGraph& pattern);

// Best bound on ex_2(n, P) reachable by reverse rule applications within
// `depth` rule steps along any branch.
BoundResult derive_upper_bound(const PatternGraph& bipartite, int depth = 12);

// Ordered pattern: quadratic when chi_< >= 3, otherwise the bipartite bound of
// its two-interval split lifted to ex_<.
BoundResult derive_ordered_upper_bound(const PatternGraph& ordered, int depth = 12);

BoundResult derive_lower_bound(const PatternGraph& pattern, int h_cap = 2);

// ex_<(n, P) from ex_2(n, P): terms with n_exp > 1 are kept, the rest gain one log.
AsymptoticBound lift_bipartite_to_ordered(const AsymptoticBound& bipartite);

// Re-applies every step and checks the recorded outputs and base cases.
// On failure, `error` (if given) names the first bad step.
bool replay_derivation(const Derivation& derivation, std::string* error = nullptr);

}  // namespace ordex
