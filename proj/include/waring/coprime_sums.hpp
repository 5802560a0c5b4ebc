#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "waring/exact_math.hpp"
#include "waring/monomials.hpp"

namespace waring {

/**
 * A sum M_1 + ... + M_s of monomials on pairwise disjoint variable sets.
 *
 * Variable labels are not stored: a sum is identified by the multiset of its
 * block shapes. Blocks share one degree and are kept in canonical order
 * (more variables first, then exponent vectors lexicographically descending).
 * Each block's own ambient count equals the number of variables it uses.
 */
class CoprimeSum {
 public:
  /// Throws DegenerateInput for an empty block list or ambient_vars = 0,
  /// std::invalid_argument for mixed degrees, DimensionError when the blocks
  /// use more than ambient_vars variables in total.
  static CoprimeSum make(std::vector<Monomial> blocks, unsigned ambient_vars);

  std::span<const Monomial> blocks() const { return blocks_; }
  unsigned ambient_vars() const { return ambient_vars_; }
  unsigned degree() const { return blocks_.front().degree(); }
  unsigned variables_used() const;
  bool spanning() const { return variables_used() == ambient_vars_; }

  /// Blocks joined by '|', e.g. "1,2|1,2".
  std::string to_string() const;
  /// x1*x2^2 + x3*x4^2 style rendering with consecutive variable labels.
  std::string to_expression() const;

  friend bool operator==(const CoprimeSum&, const CoprimeSum&) = default;

 private:
  CoprimeSum(std::vector<Monomial> blocks, unsigned ambient_vars)
      : blocks_(std::move(blocks)), ambient_vars_(ambient_vars) {}

  std::vector<Monomial> blocks_;
  unsigned ambient_vars_;
};

/// Canonical block order: true when a precedes b.
bool block_precedes(const Monomial& a, const Monomial& b);

/// Sum of block ranks.
Natural sum_rank(const CoprimeSum& f);

/**
 * Streams one CoprimeSum per nonempty multiset of partitions of d whose total
 * part count is at most n (or exactly n when spanning). Blocks come out in
 * canonical order and multisets in lexicographic order of block indices, so
 * the stream is deterministic.
 */
class CoprimeSumStream {
 public:
  CoprimeSumStream(unsigned n, unsigned d, bool spanning);
  std::optional<CoprimeSum> next();

 private:
  bool advance();
  bool accept() const;

  unsigned n_;
  bool spanning_;
  std::vector<Monomial> shapes_;  // canonical block order
  std::vector<std::size_t> picks_;  // non-decreasing indices into shapes_
  unsigned used_ = 0;
  bool started_ = false;
  bool done_ = false;
};

void for_each_coprime_sum(unsigned n, unsigned d, bool spanning,
                          const std::function<void(const CoprimeSum&)>& visit);
std::vector<CoprimeSum> enumerate_coprime_sums(unsigned n, unsigned d, bool spanning);

/// Maximum rank of a coprime sum of degree d in n variables (unused variables
/// allowed). closed_form is available for d >= n and for d = 3; it throws
/// UnsupportedRegime for n > d >= 4.
Natural r_max_star(unsigned n, unsigned d, Mode mode = Mode::closed_form);

/// Whether r_max_star has a closed form at (n, d).
bool r_max_star_has_closed_form(unsigned n, unsigned d);

/// floor(n/d) squarefree blocks of d variables, plus max_rank_monomial(n mod d, d)
/// on the leftover variables.
CoprimeSum greedy_construction(unsigned n, unsigned d);

}  // namespace waring
