#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "waring/coprime_sums.hpp"
#include "waring/exact_math.hpp"
#include "waring/monomials.hpp"

namespace waring {

enum class RankKind {
  generic,
  r_max,
  r_max_star,
  span_bound,
  improved_bound,
  jelisiejew_bound,
  ballico_deparis_bound,
  blekherman_bound,
};

std::string_view to_string(RankKind kind);

using Witness = std::variant<Monomial, CoprimeSum>;

std::string witness_string(const Witness& w);
Natural witness_rank(const Witness& w);

/// One (n, d, kind, value) row, optionally with a form attaining the value.
struct RankRecord {
  unsigned n = 0;
  unsigned d = 0;
  RankKind kind = RankKind::generic;
  Natural value;
  std::optional<Witness> witness;
  /// Set on the classical bounds when a correction binomial vanished because
  /// its arguments were out of range.
  bool correction_vanished = false;
};

/// Registry entry for a non-monomial form whose rank is known from the literature.
struct KnownExample {
  std::string label;
  unsigned n = 0;
  unsigned d = 0;
  Natural rank;
  std::string source_note;
};

/// ceil(C(d+n-1, n-1) / n), without the exceptional corrections.
Natural generic_rank_formula(unsigned n, unsigned d);

/// Whether (n, d) is one of the exceptional families (n,2), (3,4), (4,4), (5,3), (5,4)
/// where the generic rank differs from the formula. (1,2) is excluded: there
/// both values are 1.
bool is_generic_rank_exception(unsigned n, unsigned d);

/// Generic Waring rank of a degree-d form in n variables.
Natural generic_rank(unsigned n, unsigned d);

/// span, improved, Jelisiejew, Ballico-De Paris and Blekherman-Teitler bounds,
/// in that order.
std::vector<RankRecord> upper_bounds(unsigned n, unsigned d);

/// Rank of F + y_1^d + ... + y_s^d for F in separate variables.
Natural rank_add_powers(const Natural& base_rank, std::uint64_t s);

const std::vector<KnownExample>& known_examples();

}  // namespace waring
