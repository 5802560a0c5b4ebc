#include "waring/monomials.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace waring {

Monomial::Monomial(std::vector<unsigned> exponents, unsigned ambient_vars)
    : exponents_(std::move(exponents)),
      ambient_vars_(ambient_vars),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0U)) {}

Monomial Monomial::canonicalize(std::span<const unsigned> raw_exponents, unsigned ambient_vars) {
  if (ambient_vars == 0) throw DegenerateInput("monomial: ambient variable count must be positive");
  std::vector<unsigned> exps;
  exps.reserve(raw_exponents.size());
  std::copy_if(raw_exponents.begin(), raw_exponents.end(), std::back_inserter(exps),
               [](unsigned a) { return a > 0; });
  if (exps.empty()) throw DegenerateInput("monomial: all exponents are zero");
  if (exps.size() > ambient_vars) {
    throw DimensionError("monomial: " + std::to_string(exps.size()) + " variables appear but only " +
                         std::to_string(ambient_vars) + " are available");
  }
  std::sort(exps.begin(), exps.end());
  return Monomial(std::move(exps), ambient_vars);
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i != 0) os << ',';
    os << exponents_[i];
  }
  return os.str();
}

std::string Monomial::to_expression(unsigned first_variable) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i != 0) os << '*';
    os << 'x' << (first_variable + i);
    if (exponents_[i] != 1) os << '^' << exponents_[i];
  }
  return os.str();
}

Natural waring_rank(const Monomial& m) {
  const auto exps = m.exponents();
  Natural rank(1);
  for (std::size_t i = 1; i < exps.size(); ++i) rank *= Natural(exps[i] + 1ULL);
  return rank;
}

Monomial max_rank_monomial(unsigned n, unsigned d) {
  if (n == 0 || d == 0) throw DegenerateInput("max_rank_monomial: n and d must be positive");
  const unsigned used = std::min(n, d);
  if (used == 1) {
    const unsigned e[] = {d};
    return Monomial::canonicalize(e, n);
  }
  const unsigned q = (d - 1) / (used - 1);
  const unsigned s = (d - 1) % (used - 1);
  std::vector<unsigned> exps;
  exps.reserve(used);
  exps.push_back(1);
  exps.insert(exps.end(), used - 1 - s, q);
  exps.insert(exps.end(), s, q + 1);
  return Monomial::canonicalize(exps, n);
}

PartitionStream::PartitionStream(unsigned total, unsigned max_parts)
    : max_parts_(max_parts), done_(total == 0 || max_parts == 0) {
  if (!done_) parts_.push_back(total);
}

std::optional<std::span<const unsigned>> PartitionStream::current() const {
  if (done_) return std::nullopt;
  return std::span<const unsigned>(parts_);
}

bool PartitionStream::next() {
  if (done_) return false;
  // Walk left past trailing ones and past positions whose decrement cannot be
  // completed within max_parts; greedy refill gives the fewest parts, so if it
  // overflows, every smaller value at that position overflows too.
  std::size_t m = parts_.size();
  unsigned tail = 0;
  while (m > 0) {
    const unsigned last = parts_[m - 1];
    if (last == 1) {
      tail += 1;
      --m;
      continue;
    }
    const unsigned v = last - 1;
    unsigned rem = tail + 1;
    const std::size_t needed = (rem + v - 1) / v;
    if (m + needed <= max_parts_) {
      parts_.resize(m);
      parts_[m - 1] = v;
      while (rem >= v) {
        parts_.push_back(v);
        rem -= v;
      }
      if (rem != 0) parts_.push_back(rem);
      return true;
    }
    tail += last;
    --m;
  }
  done_ = true;
  parts_.clear();
  return false;
}

MonomialStream::MonomialStream(unsigned n, unsigned d) : partitions_(d, n), n_(n) {}

std::optional<Monomial> MonomialStream::next() {
  if (started_ && !partitions_.next()) return std::nullopt;
  started_ = true;
  const auto parts = partitions_.current();
  if (!parts) return std::nullopt;
  return Monomial::canonicalize(*parts, n_);
}

void for_each_monomial(unsigned n, unsigned d, const std::function<void(const Monomial&)>& visit) {
  MonomialStream stream(n, d);
  while (auto m = stream.next()) visit(*m);
}

std::vector<Monomial> enumerate_monomials(unsigned n, unsigned d) {
  std::vector<Monomial> out;
  for_each_monomial(n, d, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

Natural r_max(unsigned n, unsigned d, Mode mode) {
  if (n == 0 || d == 0) throw DegenerateInput("r_max: n and d must be positive");
  if (mode == Mode::closed_form) return waring_rank(max_rank_monomial(n, d));
  Natural best(0);
  for_each_monomial(n, d, [&](const Monomial& m) { best = std::max(best, waring_rank(m)); });
  return best;
}

}  // namespace waring
