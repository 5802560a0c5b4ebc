#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive checks of the monomial/coprime-sum rank theorems and the
 *        inequalities their proofs rest on.
 *
 * Every check is cleared of denominators and compared as integers. Grids are
 * inclusive. Cells (n, d) are independent and may be spread over worker
 * threads; results are merged in (n, d) order so a report never depends on
 * the thread count (apart from elapsed_ms).
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waring/coprime_sums.hpp"
#include "waring/exact_math.hpp"
#include "waring/monomials.hpp"
#include "waring/rank_tables.hpp"

namespace waring {

enum class Claim {
  theorem_monomial,  // r(M) < r_gen(n,d), n >= 4, d >= 2
  theorem_coprime,   // r(F) < r_gen(n,d), n >= 4, d >= 3, three exceptions at (4,3)
  lemma_slope,       // (n-1) r_max(n,d) >= n r_max(n-1,d), 2 <= n <= d, d >= 4
  ineq_agm,          // n (d+n-2)^{n-1} < (n-1)^{n-1} C(d+n-1,n-1), n >= 4, d >= 2
  ineq_pure_power,   // d C(d+n-1,n-1) > n^2 2^{d-1}, n >= d >= 4
  step_split,        // r(M') (a+1) = r(M) 2a when splitting the top exponent, d > n > 2
};

std::string_view to_string(Claim claim);
/// Accepts the hyphenated CLI spelling ("theorem-monomial", ...).
std::optional<Claim> parse_claim(std::string_view text);

enum class Status { pass, fail, pass_with_expected_exceptions };
std::string_view to_string(Status status);

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

struct Grid {
  unsigned n_min = 0, n_max = 0, d_min = 0, d_max = 0;
};

/// One checked instance. lhs and rhs are the two cleared integer sides; the
/// claim holds when they stand in the claim's relation (see relation_holds).
struct Observation {
  unsigned n = 0;
  unsigned d = 0;
  std::optional<Witness> witness;
  Natural lhs;
  Natural rhs;
  bool expected = false;  // a documented exception rather than a counterexample
};

struct VerificationReport {
  Claim claim = Claim::theorem_monomial;
  Grid grid;
  std::uint64_t checked_count = 0;
  std::vector<Observation> violations;
  Status status = Status::pass;
  bool expected_exceptions_matched = false;
  /// The instance closest to failing: largest lhs/rhs for "<" and "=" claims,
  /// smallest lhs/rhs for ">" and ">=" claims.
  std::optional<Observation> tightest;
  std::uint64_t elapsed_ms = 0;
};

/// "<", ">", ">=" or "=": the relation lhs must bear to rhs.
std::string_view relation(Claim claim);
bool relation_holds(Claim claim, const Natural& lhs, const Natural& rhs);

/// Recomputes (lhs, rhs) for an observation from its (n, d, witness) alone.
std::pair<Natural, Natural> recompute(Claim claim, const Observation& obs);

/// The three forms at (4,3) with rank >= r_gen(4,3) = 5, as canonical sums.
std::vector<CoprimeSum> expected_coprime_exceptions();

VerificationReport verify_theorem_monomial(Range n_range, Range d_range, unsigned threads = 1);
VerificationReport verify_theorem_coprime(Range n_range, Range d_range, unsigned threads = 1);
VerificationReport verify_lemma_slope(Range d_range, unsigned threads = 1);
VerificationReport verify_inequality_agm(Range n_range, Range d_range, unsigned threads = 1);
/// Checks cells with n >= d of the rectangle; cells with n < d are skipped.
VerificationReport verify_inequality_pure_power(Range d_range, Range n_range, unsigned threads = 1);
/// For 2 < n < d: M = max_rank_monomial(n-1, d), a = its top exponent, M' moves
/// one unit of a to a fresh variable. Checks r(M') (a+1) = r(M) 2a.
VerificationReport verify_step_split(Range n_range, Range d_range, unsigned threads = 1);

/// Dispatches by claim; lemma_slope ignores n_range.
VerificationReport run_verification(Claim claim, Range n_range, Range d_range, unsigned threads = 1);

enum class RankFamily { monomial, coprime };

/// Exact ratio of a maximum rank to the generic rank, with its limit.
struct RatioPoint {
  unsigned n = 0;
  unsigned d = 0;
  Ratio value;    // r_max or r_max* (or an upper bound on r_max*, see upper_bound)
  Natural generic;
  Ratio ratio;    // value / generic
  Ratio limit;
  Ratio gap;      // |ratio - limit|
  bool upper_bound = false;
};

/// d -> infinity limit of r_max(n,d)/r_gen(n,d), namely n!/(n-1)^{n-1}
/// (3/2 for n = 3, 8/9 for n = 4). The coprime family has the same limit.
Ratio d_limit(unsigned n);

/// Ratio at (n, d); the coprime family uses the closed form when one exists
/// and the oracle otherwise.
RatioPoint ratio_to_generic(unsigned n, unsigned d, RankFamily family);

/// r_max*(n,d)/r_gen(n,d) for n = d..n_max with limit 0. For d >= 4 and
/// n > oracle_max_n the value is the linear bound n 2^{d-1}/d, flagged as an
/// upper bound.
std::vector<RatioPoint> ratio_decay_fixed_d(unsigned d, unsigned n_max, unsigned oracle_max_n = 12);

}  // namespace waring
