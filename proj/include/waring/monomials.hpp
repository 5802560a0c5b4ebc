#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "waring/exact_math.hpp"

namespace waring {

/// Selects between the closed-form maximum and the brute-force enumeration.
enum class Mode { closed_form, oracle };

/**
 * A monomial x_1^{a_1} ... x_k^{a_k} living in n >= k ambient variables.
 *
 * Only the multiset of positive exponents is stored, sorted ascending, since
 * the rank formula is invariant under permuting variables. The ambient
 * variable count is kept separately: the generic rank it is compared against
 * depends on n, not on k.
 */
class Monomial {
 public:
  /// Drops zeros and sorts. Throws DegenerateInput when every exponent is
  /// zero or ambient_vars is zero, and DimensionError when more exponents
  /// are given than ambient variables exist.
  static Monomial canonicalize(std::span<const unsigned> raw_exponents, unsigned ambient_vars);

  /// Ascending, strictly positive.
  std::span<const unsigned> exponents() const { return exponents_; }
  unsigned ambient_vars() const { return ambient_vars_; }
  unsigned variables_used() const { return static_cast<unsigned>(exponents_.size()); }
  unsigned degree() const { return degree_; }

  /// Comma-separated ascending exponents, e.g. "1,2,2".
  std::string to_string() const;
  /// x1*x2^2*x3^2 style rendering.
  std::string to_expression(unsigned first_variable = 1) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Monomial(std::vector<unsigned> exponents, unsigned ambient_vars);

  std::vector<unsigned> exponents_;
  unsigned ambient_vars_ = 0;
  unsigned degree_ = 0;
};

/// r(M) = (a_2 + 1) ... (a_k + 1) over the ascending exponents.
Natural waring_rank(const Monomial& m);

/// Max-rank monomial of degree d in n variables: write d-1 = q(n'-1) + s with
/// n' = min(n, d), then x_1 x_2^q ... x_{n'-s}^q x_{n'-s+1}^{q+1} ... x_{n'}^{q+1}.
/// Throws DegenerateInput for n = 0 or d = 0.
Monomial max_rank_monomial(unsigned n, unsigned d);

/**
 * Streams the partitions of `total` into at most `max_parts` positive parts,
 * parts in non-increasing order, partitions in descending lexicographic order
 * ((4), (3,1), (2,2), (2,1,1), (1,1,1,1) for total 4).
 */
class PartitionStream {
 public:
  PartitionStream(unsigned total, unsigned max_parts);

  /// Current partition, or nullopt once exhausted.
  std::optional<std::span<const unsigned>> current() const;
  /// Advances; returns false once exhausted.
  bool next();

 private:
  std::vector<unsigned> parts_;
  unsigned max_parts_;
  bool done_;
};

/// Streams one canonical monomial per partition of d into at most n parts.
class MonomialStream {
 public:
  MonomialStream(unsigned n, unsigned d);
  /// Returns the next monomial or nullopt when exhausted.
  std::optional<Monomial> next();

 private:
  PartitionStream partitions_;
  unsigned n_;
  bool started_ = false;
};

void for_each_monomial(unsigned n, unsigned d, const std::function<void(const Monomial&)>& visit);
std::vector<Monomial> enumerate_monomials(unsigned n, unsigned d);

/// Maximum monomial rank in degree d and n variables.
Natural r_max(unsigned n, unsigned d, Mode mode = Mode::closed_form);

}  // namespace waring
