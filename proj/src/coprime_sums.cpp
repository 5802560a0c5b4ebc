#include "waring/coprime_sums.hpp"

#include <algorithm>
#include <sstream>

namespace waring {

bool block_precedes(const Monomial& a, const Monomial& b) {
  if (a.variables_used() != b.variables_used()) return a.variables_used() > b.variables_used();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

CoprimeSum CoprimeSum::make(std::vector<Monomial> blocks, unsigned ambient_vars) {
  if (ambient_vars == 0) throw DegenerateInput("coprime sum: ambient variable count must be positive");
  if (blocks.empty()) throw DegenerateInput("coprime sum: no blocks");
  const unsigned d = blocks.front().degree();
  unsigned used = 0;
  for (auto& b : blocks) {
    if (b.degree() != d) throw std::invalid_argument("coprime sum: blocks have different degrees");
    used += b.variables_used();
    b = Monomial::canonicalize(b.exponents(), b.variables_used());
  }
  if (used > ambient_vars) {
    throw DimensionError("coprime sum: blocks use " + std::to_string(used) + " variables but only " +
                         std::to_string(ambient_vars) + " are available");
  }
  std::stable_sort(blocks.begin(), blocks.end(), block_precedes);
  return CoprimeSum(std::move(blocks), ambient_vars);
}

unsigned CoprimeSum::variables_used() const {
  unsigned used = 0;
  for (const auto& b : blocks_) used += b.variables_used();
  return used;
}

std::string CoprimeSum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i != 0) out += '|';
    out += blocks_[i].to_string();
  }
  return out;
}

std::string CoprimeSum::to_expression() const {
  std::string out;
  unsigned next_var = 1;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i != 0) out += " + ";
    out += blocks_[i].to_expression(next_var);
    next_var += blocks_[i].variables_used();
  }
  return out;
}

Natural sum_rank(const CoprimeSum& f) {
  Natural total(0);
  for (const auto& b : f.blocks()) total += waring_rank(b);
  return total;
}

CoprimeSumStream::CoprimeSumStream(unsigned n, unsigned d, bool spanning)
    : n_(n), spanning_(spanning), shapes_(enumerate_monomials(n, d)) {
  for (auto& s : shapes_) s = Monomial::canonicalize(s.exponents(), s.variables_used());
  std::stable_sort(shapes_.begin(), shapes_.end(), block_precedes);
  done_ = shapes_.empty();
}

// Preorder walk over non-decreasing index sequences whose part counts fit in n.
// Shapes are sorted by variable count descending, so the first index at or
// after `from` that fits is the smallest admissible one.
bool CoprimeSumStream::advance() {
  auto first_fitting = [&](std::size_t from) -> std::optional<std::size_t> {
    for (std::size_t j = from; j < shapes_.size(); ++j) {
      if (used_ + shapes_[j].variables_used() <= n_) return j;
    }
    return std::nullopt;
  };
  auto push = [&](std::size_t j) {
    picks_.push_back(j);
    used_ += shapes_[j].variables_used();
  };

  if (auto j = first_fitting(picks_.empty() ? 0 : picks_.back())) {
    push(*j);
    return true;
  }
  while (!picks_.empty()) {
    const std::size_t i = picks_.back();
    picks_.pop_back();
    used_ -= shapes_[i].variables_used();
    if (auto j = first_fitting(i + 1)) {
      push(*j);
      return true;
    }
  }
  return false;
}

bool CoprimeSumStream::accept() const { return !spanning_ || used_ == n_; }

std::optional<CoprimeSum> CoprimeSumStream::next() {
  if (done_) return std::nullopt;
  while (true) {
    if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    if (accept()) break;
  }
  std::vector<Monomial> blocks;
  blocks.reserve(picks_.size());
  for (const std::size_t i : picks_) blocks.push_back(shapes_[i]);
  return CoprimeSum::make(std::move(blocks), n_);
}

void for_each_coprime_sum(unsigned n, unsigned d, bool spanning,
                          const std::function<void(const CoprimeSum&)>& visit) {
  CoprimeSumStream stream(n, d, spanning);
  while (auto f = stream.next()) visit(*f);
}

std::vector<CoprimeSum> enumerate_coprime_sums(unsigned n, unsigned d, bool spanning) {
  std::vector<CoprimeSum> out;
  for_each_coprime_sum(n, d, spanning, [&](const CoprimeSum& f) { out.push_back(f); });
  return out;
}

bool r_max_star_has_closed_form(unsigned n, unsigned d) { return d >= n || d == 3; }

Natural r_max_star(unsigned n, unsigned d, Mode mode) {
  if (n == 0 || d == 0) throw DegenerateInput("r_max_star: n and d must be positive");
  if (mode == Mode::oracle) {
    Natural best(0);
    for_each_coprime_sum(n, d, false, [&](const CoprimeSum& f) { best = std::max(best, sum_rank(f)); });
    return best;
  }
  if (d >= n) return r_max(n, d, Mode::closed_form);
  if (d == 3) return Natural(n % 2 == 0 ? 3ULL * n / 2 : (3ULL * n - 1) / 2);
  throw UnsupportedRegime("r_max_star: no closed form for n > d >= 4 (n=" + std::to_string(n) +
                          ", d=" + std::to_string(d) + "); use oracle mode");
}

CoprimeSum greedy_construction(unsigned n, unsigned d) {
  if (n == 0) throw DegenerateInput("greedy_construction: n must be positive");
  if (d < 2) throw UsageError("greedy_construction: d must be at least 2");
  std::vector<Monomial> blocks;
  const std::vector<unsigned> squarefree(d, 1);
  for (unsigned i = 0; i < n / d; ++i) blocks.push_back(Monomial::canonicalize(squarefree, d));
  if (const unsigned rest = n % d; rest != 0) {
    const Monomial m = max_rank_monomial(rest, d);
    blocks.push_back(Monomial::canonicalize(m.exponents(), m.variables_used()));
  }
  return CoprimeSum::make(std::move(blocks), n);
}

}  // namespace waring
