#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourmove/magnus.hpp"
#include "fourmove/underpass.hpp"

namespace fourmove {

enum class ConditionId { I, II, III, IV, V };
const char* to_string(ConditionId c);

/// A coefficient pattern that violates one of the five conditions: either
/// a single monomial whose coefficient must vanish but is 1, or a pair of
/// monomials whose coefficients must agree but differ.
struct Witness {
  int component = 0;
  ConditionId condition = ConditionId::I;
  std::vector<Monomial> monomials;  // one or two
  std::vector<int> values;          // matching Z2 coefficients
};

struct ConditionStatus {
  bool holds = true;
  std::vector<Witness> witnesses;
};

struct ComponentReport {
  int component = 0;
  std::array<ConditionStatus, 5> conditions;  // indexed by ConditionId
};

enum class Verdict { obstructed, no_obstruction_found };
const char* to_string(Verdict v);

/// Outcome of the obstruction check. NO_OBSTRUCTION_FOUND never claims that
/// the link can be trivialized: the underlying condition is one-directional.
struct ObstructionReport {
  Verdict verdict = Verdict::no_obstruction_found;
  int q = 0;
  int degree_bound = 0;  // trusted band: degrees 1..degree_bound
  std::string name;
  std::vector<std::vector<int>> linking;
  std::vector<ComponentReport> components;
};

struct CheckStats {
  int max_degree_read = 0;  // instrumentation: soundness requires <= B
};

/// Evaluate the five coefficient conditions on a commutator expansion,
/// reading only coefficients of degree <= B. Requires B >= 4 (conditions
/// I-IV read degrees 1..4) and a series truncated at D >= B.
///
///   I   c(k) = c(k,k) = c(k,k,k) = c(k,k,k,k) = 0
///   II  c(k,l,l) = c(l,k,k) = c(k,k,l) = c(l,l,k)            (k != l)
///   III c(k,l,k,l) = c(l,k,l,k); c(k,k,l,l) = c(l,l,k,k);
///       c(k,k,k,l) = c(k,k,l,k) = c(k,l,k,k) = c(l,k,k,k)    (k != l)
///   IV  a nonzero degree-4 coefficient on exactly 3 distinct indices
///       needs k1 = k2, k2 = k3, or k3 = k4
///   V   c(k1,...,kj) = 0 for pairwise distinct indices, j <= min(m, B)
std::array<ConditionStatus, 5> check_conditions(const TruncatedSeries& series, int m,
                                                int B, int component = 0,
                                                CheckStats* stats = nullptr);

/// Run the full check: commutator series per component at level q and
/// truncation D (default min(q-1, max(4, m))), then the five conditions at
/// the trusted bound B = min(q-1, D). Requires q >= 5.
ObstructionReport check_link(const UnderpassCode& code, int q = 5,
                             std::optional<int> D = std::nullopt);

std::string report_json(const ObstructionReport& r);
std::string report_text(const ObstructionReport& r);

/// Executable consistency check: random products of conjugated S-relators
/// g^-1 ((a w b w^-1)^2 (w b w^-1 a)^-2)^+-1 g must satisfy conditions I-V
/// and have every squarefree coefficient equal to zero.
struct SelftestSummary {
  int trials = 0;
  int failures = 0;
  std::string first_failure;
};

SelftestSummary relator_conditions_selftest(int trials, int m, std::uint64_t seed);

}  // namespace fourmove
