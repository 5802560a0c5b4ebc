#include "waring/rank_tables.hpp"

namespace waring {

std::string_view to_string(RankKind kind) {
  switch (kind) {
    case RankKind::generic: return "generic";
    case RankKind::r_max: return "r_max";
    case RankKind::r_max_star: return "r_max_star";
    case RankKind::span_bound: return "span_bound";
    case RankKind::improved_bound: return "improved_bound";
    case RankKind::jelisiejew_bound: return "jelisiejew_bound";
    case RankKind::ballico_deparis_bound: return "ballico_deparis_bound";
    case RankKind::blekherman_bound: return "blekherman_bound";
  }
  return "unknown";
}

std::string witness_string(const Witness& w) {
  return std::visit([](const auto& v) { return v.to_string(); }, w);
}

Natural witness_rank(const Witness& w) {
  return std::visit(
      [](const auto& v) -> Natural {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Monomial>) {
          return waring_rank(v);
        } else {
          return sum_rank(v);
        }
      },
      w);
}

Natural generic_rank_formula(unsigned n, unsigned d) {
  if (n == 0 || d == 0) throw DegenerateInput("generic_rank: n and d must be positive");
  return ceil_div(binomial(d + n - 1ULL, n - 1ULL), Natural(n));
}

bool is_generic_rank_exception(unsigned n, unsigned d) {
  if (d == 2) return n >= 2;
  return (n == 3 && d == 4) || (n == 4 && d == 4) || (n == 5 && d == 3) || (n == 5 && d == 4);
}

Natural generic_rank(unsigned n, unsigned d) {
  if (n == 0 || d == 0) throw DegenerateInput("generic_rank: n and d must be positive");
  // Alexander-Hirschowitz exceptions: quadrics have generic rank n, and four
  // sporadic cases exceed the formula by one.
  if (d == 2) return Natural(n);
  if (n == 3 && d == 4) return Natural(6);
  if (n == 4 && d == 4) return Natural(10);
  if (n == 5 && d == 3) return Natural(8);
  if (n == 5 && d == 4) return Natural(15);
  return generic_rank_formula(n, d);
}

std::vector<RankRecord> upper_bounds(unsigned n, unsigned d) {
  if (n == 0 || d == 0) throw DegenerateInput("upper_bounds: n and d must be positive");
  const auto sn = static_cast<std::int64_t>(n);
  const auto sd = static_cast<std::int64_t>(d);

  const Natural span = binomial(d + n - 1ULL, n - 1ULL);
  const Natural improved = binomial(d + n - 2ULL, n - 1ULL);
  const Natural first_correction = binomial_or_zero(sd + sn - 6, sn - 3);
  const Natural second_correction = binomial_or_zero(sd + sn - 7, sn - 3);
  const bool first_vanished = first_correction.is_zero();
  const bool second_vanished = second_correction.is_zero();

  // The corrections can exceed the leading term only far outside the range
  // where these bounds are stated; clamp at zero there.
  auto minus_or_zero = [](const Natural& a, const Natural& b) { return a >= b ? a - b : Natural(0); };
  const Natural jelisiejew = minus_or_zero(improved, first_correction);
  const Natural ballico = minus_or_zero(jelisiejew, second_correction);

  std::vector<RankRecord> out;
  out.push_back({n, d, RankKind::span_bound, span, std::nullopt, false});
  out.push_back({n, d, RankKind::improved_bound, improved, std::nullopt, false});
  out.push_back({n, d, RankKind::jelisiejew_bound, jelisiejew, std::nullopt, first_vanished});
  out.push_back({n, d, RankKind::ballico_deparis_bound, ballico, std::nullopt, first_vanished || second_vanished});
  out.push_back({n, d, RankKind::blekherman_bound, Natural(2) * generic_rank(n, d), std::nullopt, false});
  return out;
}

Natural rank_add_powers(const Natural& base_rank, std::uint64_t s) {
  if (base_rank.is_zero()) throw DegenerateInput("rank_add_powers: base rank must be positive");
  return base_rank + Natural(s);
}

const std::vector<KnownExample>& known_examples() {
  static const std::vector<KnownExample> registry = {
      {"x^2*y + y^2*z", 3, 3, Natural(5), "plane cubic of rank 5 (Landsberg-Teitler; Kleppe)"},
      {"x^2*y^2 + y^3*z", 3, 4, Natural(7), "plane quartic of rank 7 (Kleppe)"},
      {"x^2*y + y^2*z + w^3", 4, 3, rank_add_powers(Natural(5), 1),
       "plane cubic plus a cube in a new variable (Carlini-Catalisano-Chiantini additivity)"},
  };
  return registry;
}

}  // namespace waring
