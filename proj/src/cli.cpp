#include "waring/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "waring/report.hpp"

namespace waring::cli {

namespace {

unsigned parse_unsigned(std::string_view text, std::string_view what) {
  unsigned value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw UsageError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string approx(const Natural& v) { return approx_string(v.to_double()); }
std::string approx(const Ratio& v) { return approx_string(v.to_double()); }
std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<unsigned> expand(Range r) {
  std::vector<unsigned> out;
  for (unsigned v = r.lo; v <= r.hi; ++v) out.push_back(v);
  return out;
}

std::string range_string(Range r) { return std::to_string(r.lo) + ":" + std::to_string(r.hi); }

Range positive_range(const std::string& text, const char* name) {
  const Range r = parse_range(text);
  if (r.lo == 0) throw UsageError(std::string(name) + " must be positive");
  return r;
}

const std::vector<std::string> kQuantityColumns = {"n", "d", "kind", "value", "value_approx", "witness"};

std::vector<std::string> with_quantity_columns(std::initializer_list<std::string> extra) {
  std::vector<std::string> cols = kQuantityColumns;
  cols.insert(cols.end(), extra);
  return cols;
}

CoprimeSum as_sum(const Monomial& m) {
  return CoprimeSum::make({Monomial::canonicalize(m.exponents(), m.variables_used())}, m.ambient_vars());
}

// Witness for the closed-form r_max*: the max-rank monomial when d >= n,
// otherwise (d = 3) blocks x y^2 with one cube left over for odd n.
CoprimeSum closed_form_star_witness(unsigned n, unsigned d) {
  if (d >= n) return as_sum(max_rank_monomial(n, d));
  const std::vector<unsigned> pair = {1, 2};
  const std::vector<unsigned> cube = {3};
  std::vector<Monomial> blocks(n / 2, Monomial::canonicalize(pair, 2));
  if (n % 2 != 0) blocks.push_back(Monomial::canonicalize(cube, 1));
  return CoprimeSum::make(std::move(blocks), n);
}

// ---------------------------------------------------------------------------
// Commands. Each fills `doc` and returns an exit code.

struct RankArgs {
  std::string monomial;
  std::string sum;
  unsigned n = 0;
};

int cmd_rank(const RankArgs& a, ReportDocument& doc) {
  if (a.monomial.empty() == a.sum.empty()) throw UsageError("rank: give exactly one of --monomial or --sum");
  doc.columns = with_quantity_columns({"expression", "variables_used", "blocks"});
  if (!a.monomial.empty()) {
    const auto raw = parse_exponents(a.monomial);
    const unsigned n = a.n != 0 ? a.n : static_cast<unsigned>(raw.size());
    const Monomial m = Monomial::canonicalize(raw, n);
    doc.parameters = {{"monomial", a.monomial}, {"n", std::to_string(n)}};
    const Natural r = waring_rank(m);
    doc.add_row({std::to_string(n), std::to_string(m.degree()), "monomial", r.to_string(), approx(r), m.to_string(),
                  m.to_expression(), std::to_string(m.variables_used()), "1"});
    return kExitSuccess;
  }
  const auto raw_blocks = parse_blocks(a.sum);
  std::vector<Monomial> blocks;
  unsigned entries = 0;
  for (const auto& b : raw_blocks) {
    const Monomial m = Monomial::canonicalize(b, static_cast<unsigned>(b.size()));
    blocks.push_back(Monomial::canonicalize(m.exponents(), m.variables_used()));
    entries += static_cast<unsigned>(b.size());
  }
  const unsigned n = a.n != 0 ? a.n : entries;
  const CoprimeSum f = CoprimeSum::make(std::move(blocks), n);
  doc.parameters = {{"sum", a.sum}, {"n", std::to_string(n)}};
  const Natural r = sum_rank(f);
  doc.add_row({std::to_string(n), std::to_string(f.degree()), "coprime_sum", r.to_string(), approx(r), f.to_string(),
               f.to_expression(), std::to_string(f.variables_used()), std::to_string(f.blocks().size())});
  return kExitSuccess;
}

int cmd_generic_rank(Range ns, Range ds, ReportDocument& doc) {
  doc.parameters = {{"n", range_string(ns)}, {"d", range_string(ds)}};
  doc.columns = with_quantity_columns({"formula_value", "exceptional"});
  for (unsigned n : expand(ns)) {
    for (unsigned d : expand(ds)) {
      const Natural g = generic_rank(n, d);
      doc.add_row({std::to_string(n), std::to_string(d), "generic", g.to_string(), approx(g), "",
                   generic_rank_formula(n, d).to_string(), yes_no(is_generic_rank_exception(n, d))});
    }
  }
  return kExitSuccess;
}

int cmd_max_rank(Range ns, Range ds, bool oracle, ReportDocument& doc) {
  doc.parameters = {{"n", range_string(ns)}, {"d", range_string(ds)}, {"mode", oracle ? "oracle" : "closed_form"}};
  doc.columns = with_quantity_columns({"mode"});
  for (unsigned n : expand(ns)) {
    for (unsigned d : expand(ds)) {
      std::optional<Monomial> witness;
      Natural best(0);
      if (oracle) {
        for_each_monomial(n, d, [&](const Monomial& m) {
          const Natural r = waring_rank(m);
          if (!witness || r > best) {
            best = r;
            witness = m;
          }
        });
      } else {
        witness = max_rank_monomial(n, d);
        best = waring_rank(*witness);
      }
      doc.add_row({std::to_string(n), std::to_string(d), "r_max", best.to_string(), approx(best),
                   witness->to_string(), oracle ? "oracle" : "closed_form"});
    }
  }
  return kExitSuccess;
}

int cmd_max_rank_sum(Range ns, Range ds, bool oracle, bool spanning, ReportDocument& doc) {
  if (spanning && !oracle) throw UsageError("max-rank-sum: --spanning requires --oracle");
  doc.parameters = {{"n", range_string(ns)},
                    {"d", range_string(ds)},
                    {"mode", oracle ? "oracle" : "closed_form"},
                    {"spanning", yes_no(spanning)}};
  doc.columns = with_quantity_columns({"mode"});
  for (unsigned n : expand(ns)) {
    for (unsigned d : expand(ds)) {
      std::optional<CoprimeSum> witness;
      Natural best(0);
      if (oracle) {
        for_each_coprime_sum(n, d, spanning, [&](const CoprimeSum& f) {
          const Natural r = sum_rank(f);
          if (!witness || r > best) {
            best = r;
            witness = f;
          }
        });
        if (!witness) throw UsageError("max-rank-sum: no spanning sum exists at (" + std::to_string(n) + "," +
                                       std::to_string(d) + ")");
      } else {
        best = r_max_star(n, d, Mode::closed_form);
        witness = closed_form_star_witness(n, d);
      }
      doc.add_row({std::to_string(n), std::to_string(d), "r_max_star", best.to_string(), approx(best),
                   witness->to_string(), oracle ? "oracle" : "closed_form"});
    }
  }
  return kExitSuccess;
}

int cmd_bounds(Range ns, Range ds, ReportDocument& doc) {
  doc.parameters = {{"n", range_string(ns)}, {"d", range_string(ds)}};
  doc.columns = with_quantity_columns({"note"});
  for (unsigned n : expand(ns)) {
    for (unsigned d : expand(ds)) {
      const Natural g = generic_rank(n, d);
      doc.add_row({std::to_string(n), std::to_string(d), "generic", g.to_string(), approx(g), "", "reference"});
      for (const RankRecord& rec : upper_bounds(n, d)) {
        std::string note;
        if (rec.correction_vanished) note = "correction binomial vanished";
        if (rec.kind == RankKind::ballico_deparis_bound) {
          // dn/(d+n-1) is only a heuristic estimate of bound/generic.
          const double heuristic = static_cast<double>(d) * n / (d + n - 1.0);
          if (!note.empty()) note += "; ";
          note += "ratio_to_generic_approx=" + approx(Ratio(rec.value, g)) +
                  "; heuristic_dn_over_d_plus_n_minus_1_approx=" + approx_string(heuristic);
        }
        doc.add_row({std::to_string(n), std::to_string(d), std::string(to_string(rec.kind)), rec.value.to_string(),
                     approx(rec.value), "", note});
      }
    }
  }
  return kExitSuccess;
}

int cmd_enumerate(Range ns, Range ds, bool sums, bool spanning, ReportDocument& doc) {
  doc.parameters = {{"n", range_string(ns)},
                    {"d", range_string(ds)},
                    {"objects", sums ? "coprime_sums" : "monomials"},
                    {"spanning", yes_no(spanning)}};
  doc.columns = with_quantity_columns({"expression", "variables_used"});
  std::uint64_t count = 0;
  for (unsigned n : expand(ns)) {
    for (unsigned d : expand(ds)) {
      if (sums) {
        for_each_coprime_sum(n, d, spanning, [&](const CoprimeSum& f) {
          const Natural r = sum_rank(f);
          doc.add_row({std::to_string(n), std::to_string(d), "coprime_sum", r.to_string(), approx(r), f.to_string(),
                       f.to_expression(), std::to_string(f.variables_used())});
          ++count;
        });
      } else {
        for_each_monomial(n, d, [&](const Monomial& m) {
          if (spanning && m.variables_used() != n) return;
          const Natural r = waring_rank(m);
          doc.add_row({std::to_string(n), std::to_string(d), "monomial", r.to_string(), approx(r), m.to_string(),
                       m.to_expression(), std::to_string(m.variables_used())});
          ++count;
        });
      }
    }
  }
  doc.summary = {{"count", std::to_string(count)}};
  return kExitSuccess;
}

struct VerifyArgs {
  std::string claim;
  std::string n_range;
  std::string d_range;
};

int cmd_verify(const VerifyArgs& a, unsigned threads, bool deterministic, ReportDocument& doc) {
  const auto claim = parse_claim(a.claim);
  if (!claim) throw UsageError("verify: unknown claim '" + a.claim + "'");
  // Defaults n in [4,8], d in [2,20], raised to each claim's lower limit.
  unsigned d_floor = 2;
  if (*claim == Claim::theorem_coprime) d_floor = 3;
  if (*claim == Claim::lemma_slope || *claim == Claim::ineq_pure_power) d_floor = 4;
  const Range ns = a.n_range.empty() ? Range{4, 8} : parse_range(a.n_range);
  const Range ds = a.d_range.empty() ? Range{d_floor, 20} : parse_range(a.d_range);

  const VerificationReport report = run_verification(*claim, ns, ds, threads);
  doc.parameters = {{"claim", a.claim}};
  if (*claim != Claim::lemma_slope) doc.parameters.emplace_back("n_range", range_string(ns));
  doc.parameters.emplace_back("d_range", range_string(ds));
  doc.parameters.emplace_back("threads", std::to_string(threads));

  doc.summary = {{"status", std::string(to_string(report.status))},
                 {"relation", "lhs " + std::string(relation(*claim)) + " rhs"},
                 {"grid", "n " + std::to_string(report.grid.n_min) + ":" + std::to_string(report.grid.n_max) +
                              ", d " + std::to_string(report.grid.d_min) + ":" + std::to_string(report.grid.d_max)},
                 {"checked_count", std::to_string(report.checked_count)},
                 {"violations", std::to_string(report.violations.size())},
                 {"expected_exceptions_matched", yes_no(report.expected_exceptions_matched)}};
  if (report.tightest) {
    const Observation& t = *report.tightest;
    doc.summary.emplace_back("tightest", "n=" + std::to_string(t.n) + " d=" + std::to_string(t.d) +
                                             (t.witness ? " witness=" + witness_string(*t.witness) : "") +
                                             " lhs=" + t.lhs.to_string() + " rhs=" + t.rhs.to_string());
  }
  if (!deterministic) doc.summary.emplace_back("elapsed_ms", std::to_string(report.elapsed_ms));

  doc.columns = {"n", "d", "kind", "witness", "lhs", "relation", "rhs", "expected"};
  for (const Observation& v : report.violations) {
    doc.add_row({std::to_string(v.n), std::to_string(v.d), a.claim, v.witness ? witness_string(*v.witness) : "",
                 v.lhs.to_string(), std::string(relation(*claim)), v.rhs.to_string(), yes_no(v.expected)});
  }
  return exit_code_for(report);
}

const std::vector<std::string> kRatioColumns = {"n",     "d",     "kind",       "value", "value_approx",
                                                "generic", "ratio", "ratio_approx", "limit", "gap",
                                                "gap_approx", "upper_bound"};

void add_ratio_row(ReportDocument& doc, const RatioPoint& p, std::string_view kind) {
  doc.add_row({std::to_string(p.n), std::to_string(p.d), std::string(kind), p.value.to_string(), approx(p.value),
               p.generic.to_string(), p.ratio.to_string(), approx(p.ratio), p.limit.to_string(), p.gap.to_string(),
               approx(p.gap), yes_no(p.upper_bound)});
}

struct AsymptoticsArgs {
  std::string mode;
  unsigned n = 0;
  unsigned d = 0;
  std::string d_samples;
  unsigned n_max = 0;
  unsigned oracle_max_n = 12;
  std::string family = "monomial";
};

int cmd_asymptotics(const AsymptoticsArgs& a, ReportDocument& doc) {
  doc.columns = kRatioColumns;
  if (a.mode == "d-limit") {
    if (a.n < 2) throw UsageError("asymptotics d-limit: --n must be at least 2");
    if (a.d_samples.empty()) throw UsageError("asymptotics d-limit: --d-samples is required");
    RankFamily family;
    if (a.family == "monomial") {
      family = RankFamily::monomial;
    } else if (a.family == "coprime") {
      family = RankFamily::coprime;
    } else {
      throw UsageError("asymptotics: unknown family '" + a.family + "'");
    }
    doc.parameters = {{"mode", a.mode}, {"n", std::to_string(a.n)}, {"d_samples", a.d_samples}, {"family", a.family}};
    const char* kind = family == RankFamily::monomial ? "r_max/generic" : "r_max_star/generic";
    for (auto s : split(a.d_samples, ',')) {
      add_ratio_row(doc, ratio_to_generic(a.n, parse_unsigned(s, "d sample"), family), kind);
    }
    const Ratio limit = d_limit(a.n);
    doc.summary = {{"limit", limit.to_string()}, {"limit_approx", approx(limit)}};
    return kExitSuccess;
  }
  if (a.mode == "n-limit") {
    if (a.d < 3) throw UsageError("asymptotics n-limit: --d must be at least 3");
    if (a.n_max < a.d) throw UsageError("asymptotics n-limit: --n-max must be at least --d");
    doc.parameters = {{"mode", a.mode},
                      {"d", std::to_string(a.d)},
                      {"n_max", std::to_string(a.n_max)},
                      {"oracle_max_n", std::to_string(a.oracle_max_n)}};
    const auto points = ratio_decay_fixed_d(a.d, a.n_max, a.oracle_max_n);
    for (const auto& p : points) add_ratio_row(doc, p, "r_max_star/generic");
    doc.summary = {{"limit", "0"}, {"final_ratio", points.back().ratio.to_string()},
                   {"final_ratio_approx", approx(points.back().ratio)}};
    return kExitSuccess;
  }
  throw UsageError("asymptotics: unknown mode '" + a.mode + "' (expected d-limit or n-limit)");
}

int cmd_table(const std::string& name, ReportDocument& doc) {
  doc.parameters = {{"name", name}};
  if (name == "exceptional-44-53") {
    doc.columns = {"n", "d", "monomial", "expression", "rank", "generic_rank"};
    for (const auto& [n, d] : {std::pair{4U, 4U}, std::pair{5U, 3U}}) {
      auto monomials = enumerate_monomials(n, d);
      std::stable_sort(monomials.begin(), monomials.end(),
                       [](const Monomial& x, const Monomial& y) { return waring_rank(x) > waring_rank(y); });
      const Natural g = generic_rank(n, d);
      for (const auto& m : monomials) {
        doc.add_row({std::to_string(n), std::to_string(d), m.to_string(), m.to_expression(),
                     waring_rank(m).to_string(), g.to_string()});
      }
    }
    return kExitSuccess;
  }
  if (name == "coprime-43") {
    doc.columns = {"n", "d", "sum", "expression", "rank", "generic_rank", "comparison"};
    auto sums = enumerate_coprime_sums(4, 3, true);
    std::stable_sort(sums.begin(), sums.end(), [](const CoprimeSum& x, const CoprimeSum& y) {
      const Natural rx = sum_rank(x);
      const Natural ry = sum_rank(y);
      if (rx != ry) return rx < ry;
      return x.blocks().size() > y.blocks().size();
    });
    const Natural g = generic_rank(4, 3);
    for (const auto& f : sums) {
      const Natural r = sum_rank(f);
      const char* cmp = r < g ? "less" : (r == g ? "equal" : "greater");
      doc.add_row({"4", "3", f.to_string(), f.to_expression(), r.to_string(), g.to_string(), cmp});
    }
    return kExitSuccess;
  }
  if (name == "known-examples") {
    doc.columns = {"label", "n", "d", "rank", "generic_rank", "source"};
    for (const auto& e : known_examples()) {
      doc.add_row({e.label, std::to_string(e.n), std::to_string(e.d), e.rank.to_string(),
                   generic_rank(e.n, e.d).to_string(), e.source_note});
    }
    return kExitSuccess;
  }
  throw UsageError("table: unknown table '" + name + "' (expected exceptional-44-53, coprime-43, known-examples)");
}

}  // namespace

int exit_code_for(const VerificationReport& report) {
  return report.status == Status::fail ? kExitCounterexample : kExitSuccess;
}

std::vector<unsigned> parse_exponents(std::string_view text) {
  if (text.empty()) throw UsageError("empty exponent list");
  std::vector<unsigned> out;
  for (auto part : split(text, ',')) out.push_back(parse_unsigned(part, "exponent list"));
  return out;
}

std::vector<std::vector<unsigned>> parse_blocks(std::string_view text) {
  if (text.empty()) throw UsageError("empty coprime sum");
  std::vector<std::vector<unsigned>> out;
  for (auto part : split(text, '|')) out.push_back(parse_exponents(part));
  return out;
}

Range parse_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) {
    const unsigned v = parse_unsigned(parts[0], "range");
    return {v, v};
  }
  if (parts.size() != 2) throw UsageError("malformed range '" + std::string(text) + "' (expected a:b)");
  const Range r{parse_unsigned(parts[0], "range"), parse_unsigned(parts[1], "range")};
  if (r.lo > r.hi) throw UsageError("empty range '" + std::string(text) + "'");
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Waring ranks of monomials and sums of pairwise coprime monomials", "waring"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "md";
  std::string out_file;
  bool deterministic = false;
  unsigned threads = 1;
  app.add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--out", out_file, "write the report to FILE instead of standard output");
  app.add_flag("--deterministic", deterministic, "omit timestamps and timings");
  app.add_option("--threads", threads, "worker threads for verification")->check(CLI::Range(1U, 1024U));

  RankArgs rank_args;
  auto* rank = app.add_subcommand("rank", "rank of a monomial or a coprime sum");
  rank->add_option("--monomial", rank_args.monomial, "comma-separated exponents, e.g. 1,2,2");
  rank->add_option("--sum", rank_args.sum, "blocks joined by '|', e.g. \"1,2|1,2\"");
  rank->add_option("--n", rank_args.n, "ambient variable count (default: number of exponents given)");

  std::string n_text;
  std::string d_text;
  bool oracle = false;
  bool spanning = false;
  bool sums = false;
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--n", n_text, "n or n_min:n_max")->required();
    sub->add_option("--d", d_text, "d or d_min:d_max")->required();
  };
  auto* generic = app.add_subcommand("generic-rank", "generic Waring rank");
  add_grid(generic);
  auto* max_rank = app.add_subcommand("max-rank", "maximum monomial rank");
  add_grid(max_rank);
  max_rank->add_flag("--oracle", oracle, "brute-force over all monomials");
  auto* max_rank_sum = app.add_subcommand("max-rank-sum", "maximum rank of a coprime sum");
  add_grid(max_rank_sum);
  max_rank_sum->add_flag("--oracle", oracle, "brute-force over all coprime sums");
  max_rank_sum->add_flag("--spanning", spanning, "only sums using every variable (requires --oracle)");
  auto* bounds = app.add_subcommand("bounds", "classical upper bounds on the maximum rank");
  add_grid(bounds);
  auto* enumerate = app.add_subcommand("enumerate", "list monomials or coprime sums with ranks");
  add_grid(enumerate);
  enumerate->add_flag("--sums", sums, "enumerate coprime sums instead of monomials");
  enumerate->add_flag("--spanning", spanning, "only forms using every variable");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "exhaustively check a claim on a grid");
  verify->add_option("--claim", verify_args.claim,
                     "theorem-monomial, theorem-coprime, lemma-slope, ineq-agm, ineq-pure-power, step-split")
      ->required();
  verify->add_option("--n-range", verify_args.n_range, "a:b (default 4:8)");
  verify->add_option("--d-range", verify_args.d_range, "c:e (default from the claim's minimum to 20)");

  AsymptoticsArgs asym_args;
  auto* asymptotics = app.add_subcommand("asymptotics", "exact ratios of maximum ranks to the generic rank");
  asymptotics->add_option("--mode", asym_args.mode, "d-limit or n-limit")->required();
  asymptotics->add_option("--n", asym_args.n, "n for d-limit");
  asymptotics->add_option("--d", asym_args.d, "d for n-limit");
  asymptotics->add_option("--d-samples", asym_args.d_samples, "comma-separated degrees for d-limit");
  asymptotics->add_option("--n-max", asym_args.n_max, "largest n for n-limit");
  asymptotics->add_option("--oracle-max-n", asym_args.oracle_max_n,
                          "largest n brute-forced in n-limit before falling back to the linear bound");
  asymptotics->add_option("--family", asym_args.family, "monomial or coprime (d-limit)");

  std::string table_name;
  auto* table = app.add_subcommand("table", "regenerate a reference table");
  table->add_option("--name", table_name, "exceptional-44-53, coprime-43 or known-examples")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  ReportDocument doc;
  int code = kExitSuccess;
  try {
    CLI::App* chosen = app.get_subcommands().front();
    doc.command = chosen->get_name();
    if (chosen == rank) {
      code = cmd_rank(rank_args, doc);
    } else if (chosen == generic) {
      code = cmd_generic_rank(positive_range(n_text, "n"), positive_range(d_text, "d"), doc);
    } else if (chosen == max_rank) {
      code = cmd_max_rank(positive_range(n_text, "n"), positive_range(d_text, "d"), oracle, doc);
    } else if (chosen == max_rank_sum) {
      code = cmd_max_rank_sum(positive_range(n_text, "n"), positive_range(d_text, "d"), oracle, spanning, doc);
    } else if (chosen == bounds) {
      code = cmd_bounds(positive_range(n_text, "n"), positive_range(d_text, "d"), doc);
    } else if (chosen == enumerate) {
      code = cmd_enumerate(positive_range(n_text, "n"), positive_range(d_text, "d"), sums, spanning, doc);
    } else if (chosen == verify) {
      code = cmd_verify(verify_args, threads, deterministic, doc);
    } else if (chosen == asymptotics) {
      code = cmd_asymptotics(asym_args, doc);
    } else {
      code = cmd_table(table_name, doc);
    }
  } catch (const UnsupportedRegime& e) {
    err << "error: " << e.what() << " (pass --oracle)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!deterministic) doc.generated_at = utc_timestamp();
  const std::string text = render(doc, *parse_format(format));
  if (out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << out_file << "' for writing\n";
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace waring::cli
