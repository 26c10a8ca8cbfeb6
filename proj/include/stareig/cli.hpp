#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stareig/codes.hpp"
#include "stareig/eigenfunction.hpp"
#include "stareig/extremal.hpp"
#include "stareig/json_io.hpp"
#include "stareig/matrix_forms.hpp"
#include "stareig/special_matrix.hpp"
#include "stareig/star_graph.hpp"
#include "stareig/version.hpp"

namespace stareig {

enum class Format { Json, Csv, Text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw std::invalid_argument("unknown format \"" + s + "\" (expected json, csv or text)");
}

struct RunConfig {
  std::string command;
  int n = 0;      // 0 picks the command default
  int n_max = 0;  // 0 closes the range at n (or the command default)
  std::uint64_t seed = 12345;
  int radius = 2;
  int samples = 50;
  std::string matrix_file;
  Format format = Format::Json;
  std::string out_path;
  bool force_large_n = false;
  bool inject_fault = false;  // test hook: corrupts one verified function
};

struct Check {
  enum class Status { Pass, Fail, Skip, Info };
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

// One command run. Content depends only on the flags and the seed; anything
// nondeterministic (wall-clock in particular) stays out.
struct Report {
  std::string command;
  json parameters = json::object();
  json results = json::object();
  std::vector<Check> checks;

  bool all_passed() const {
    for (const Check& c : checks)
      if (c.status == Check::Status::Fail) return false;
    return true;
  }
};

inline int exit_code(const Report& r) { return r.all_passed() ? 0 : 1; }

namespace detail {

struct Range {
  int lo = 0;
  int hi = 0;
};

inline Range resolve_range(const RunConfig& cfg, int default_lo, int default_hi, int cap_lo,
                           int cap_hi) {
  Range r;
  r.lo = cfg.n != 0 ? cfg.n : default_lo;
  r.hi = cfg.n_max != 0 ? cfg.n_max : (cfg.n != 0 ? cfg.n : default_hi);
  if (r.lo > r.hi)
    throw std::invalid_argument(cfg.command + ": empty range n = " + std::to_string(r.lo) +
                                ".." + std::to_string(r.hi));
  if (r.lo < cap_lo || r.hi > cap_hi)
    throw std::invalid_argument(cfg.command + ": n range " + std::to_string(r.lo) + ".." +
                                std::to_string(r.hi) + " outside [" + std::to_string(cap_lo) +
                                ", " + std::to_string(cap_hi) + "]");
  return r;
}

inline std::string range_text(int lo, int hi) {
  return lo == hi ? "n = " + std::to_string(lo)
                  : "n = " + std::to_string(lo) + ".." + std::to_string(hi);
}

inline CoefficientVector random_coefficients(int n, std::mt19937_64& rng) {
  CoefficientVector c(n);
  bool nonzero = false;
  for (int u = 2; u <= n; ++u)
    for (int w = 3; w <= n; ++w) {
      int v = static_cast<int>(rng() % 7) - 3;
      if (v != 0) nonzero = true;
      c.set(u, w, Rational(v));
    }
  if (!nonzero) c.set(2, 3, Rational(1));
  return c;
}

inline std::string row_kind_tag(RowClass::Kind k) {
  switch (k) {
    case RowClass::Kind::Zero: return "zero";
    case RowClass::Kind::Pair: return "pair";
    case RowClass::Kind::Spread: return "spread";
    default: return "irregular";
  }
}

inline std::string class_kind_tag(MatrixClass::Kind k) {
  switch (k) {
    case MatrixClass::Kind::UniformPair: return "uniform-pair";
    case MatrixClass::Kind::SingleRow: return "single-row";
    default: return "other";
  }
}

}  // namespace detail

inline Report cmd_graph_stats(const RunConfig& cfg) {
  detail::Range r = detail::resolve_range(cfg, 3, 5, 3, 7);
  Report rep;
  rep.command = "graph-stats";
  rep.parameters = json{{"n", r.lo}, {"n_max", r.hi}, {"seed", cfg.seed}};

  json table = json::array();
  for (int n = r.lo; n <= r.hi; ++n) {
    GraphStats s = graph_stats(n);
    int expected_diameter = 3 * (n - 1) / 2;
    bool ok = s.order == factorial(n) && s.degree == n - 1 && s.is_bipartite &&
              s.girth == 6 && s.diameter == expected_diameter;
    table.push_back(json{{"n", n},
                         {"order", s.order},
                         {"degree", s.degree},
                         {"bipartite", s.is_bipartite},
                         {"girth", s.girth},
                         {"expected_girth", 6},
                         {"diameter", s.diameter},
                         {"expected_diameter", expected_diameter},
                         {"matches", ok}});
    std::ostringstream d;
    d << "order " << s.order << ", degree " << s.degree << ", bipartite "
      << (s.is_bipartite ? "yes" : "no") << ", girth " << s.girth << " (expected 6)"
      << ", diameter " << s.diameter << " (expected " << expected_diameter << ")";
    rep.checks.push_back(
        {"graph-n" + std::to_string(n), ok ? Check::Status::Pass : Check::Status::Fail,
         d.str()});
  }
  rep.results = json{{"table", std::move(table)}};
  return rep;
}

inline Report cmd_verify(const RunConfig& cfg) {
  detail::Range r = detail::resolve_range(cfg, 3, 5, 3, 8);
  if (cfg.samples < 1) throw std::invalid_argument("verify: samples must be >= 1");
  Report rep;
  rep.command = "verify";
  rep.parameters = json{{"n", r.lo},
                        {"n_max", r.hi},
                        {"seed", cfg.seed},
                        {"samples", cfg.samples},
                        {"inject_fault", cfg.inject_fault}};
  json ranges = json::object();

  auto clamp_hi = [&](int cap) { return std::min(r.hi, cap); };
  auto skip = [](const std::string& name, int cap) {
    return Check{name, Check::Status::Skip,
                 "no n in range within the supported cap " + std::to_string(cap)};
  };

  {
    int hi = clamp_hi(7);
    if (r.lo > hi) {
      rep.checks.push_back(skip("basis-rank", 7));
    } else {
      bool ok = true;
      std::string bad;
      for (int n = r.lo; n <= hi && ok; ++n) {
        BasisCheck b = verify_basis(n);
        if (!b.ok) {
          ok = false;
          bad = "n = " + std::to_string(n) + ": rank " + std::to_string(b.rank_found) +
                " of expected " + std::to_string(b.expected_rank) +
                (b.members_are_eigenfunctions ? "" : ", basis member fails the eigenvalue test");
        }
      }
      ranges["basis_rank"] = json::array({r.lo, hi});
      rep.checks.push_back({"basis-rank",
                            ok ? Check::Status::Pass : Check::Status::Fail,
                            ok ? "rank (n-1)(n-2) confirmed for " + detail::range_text(r.lo, hi)
                               : bad});
    }
  }

  {
    int hi = clamp_hi(6);
    if (r.lo > hi) {
      rep.checks.push_back(skip("eigenvalue-equation", 6));
    } else {
      bool ok = true;
      std::string bad;
      bool fault_pending = cfg.inject_fault;
      for (int n = r.lo; n <= hi && ok; ++n) {
        for (int u = 1; u <= n && ok; ++u)
          for (int v = 2; v <= n && ok; ++v)
            for (int w = 2; w <= n && ok; ++w) {
              if (v == w) continue;
              VertexFunction f = elementary(u, v, w, n);
              if (fault_pending && u == 2 && v == 2 && w == 3) {
                std::vector<Rational> table = tabulate(f);
                table[0] += 1;
                f = from_table(n, std::move(table));
                fault_pending = false;
              }
              if (!is_eigenfunction(f, Rational(n - 2))) {
                ok = false;
                bad = "f_" + std::to_string(u) + "^{" + std::to_string(v) + "," +
                      std::to_string(w) + "} at n = " + std::to_string(n) +
                      " fails the eigenvalue equation" +
                      (cfg.inject_fault ? " (fault injection active)" : "");
              }
            }
      }
      ranges["eigenvalue_equation"] = json::array({r.lo, hi});
      rep.checks.push_back(
          {"eigenvalue-equation", ok ? Check::Status::Pass : Check::Status::Fail,
           ok ? "all elementary functions satisfy lambda = n-2 for " +
                    detail::range_text(r.lo, hi)
              : bad});
    }
  }

  {
    int hi = clamp_hi(5);
    if (r.lo > hi) {
      rep.checks.push_back(skip("matrix-correspondence", 5));
    } else {
      bool ok = true;
      std::string bad;
      for (int n = r.lo; n <= hi && ok; ++n) {
        std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(n));
        for (int s = 0; s < cfg.samples && ok; ++s) {
          CoefficientVector c = detail::random_coefficients(n, rng);
          VertexFunction f = from_coefficients(c);
          SquareMatrix M = matrix_of(c);
          for (PermutationEnumerator e(n); !e.done() && ok; e.advance()) {
            Permutation p = e.current();
            if (f(p) != diagonal_sum(M, inverse(p))) {
              ok = false;
              bad = "n = " + std::to_string(n) + ", sample " + std::to_string(s) +
                    ": direct and diagonal-sum evaluation disagree at rank " +
                    std::to_string(e.current_rank());
            }
          }
          if (ok && support(f).count != g_M(M)) {
            ok = false;
            bad = "n = " + std::to_string(n) + ", sample " + std::to_string(s) +
                  ": |Supp(f)| differs from g_M";
          }
        }
      }
      ranges["matrix_correspondence"] = json::array({r.lo, hi});
      rep.checks.push_back(
          {"matrix-correspondence", ok ? Check::Status::Pass : Check::Status::Fail,
           ok ? std::to_string(cfg.samples) + " seeded vectors per n for " +
                    detail::range_text(r.lo, hi) +
                    ": evaluation routes agree and |Supp(f)| = g_M"
              : bad});
    }
  }

  {
    int hi = clamp_hi(6);
    if (r.lo > hi) {
      rep.checks.push_back(skip("crc-quotient", 6));
    } else {
      bool ok = true;
      std::string bad;
      int checked = 0;
      for (int n = r.lo; n <= hi && ok; ++n) {
        QuotientMatrix expected{{n - 2, 1, 0}, {1, 0, n - 2}, {0, 1, n - 2}};
        for (int alpha = 2; alpha <= n && ok; ++alpha)
          for (int a = 1; a <= n && ok; ++a) {
            auto res = is_completely_regular(coset(a, alpha, n));
            if (!res || res->rho != 2 || res->quotient != expected) {
              ok = false;
              bad = "coset(a=" + std::to_string(a) + ", alpha=" + std::to_string(alpha) +
                    ") at n = " + std::to_string(n) + " misses the expected quotient";
            }
            ++checked;
          }
      }
      ranges["crc_quotient"] = json::array({r.lo, hi});
      rep.checks.push_back({"crc-quotient",
                            ok ? Check::Status::Pass : Check::Status::Fail,
                            ok ? std::to_string(checked) + " cosets for " +
                                     detail::range_text(r.lo, hi) +
                                     ": completely regular, rho = 2, expected quotient"
                               : bad});
    }
  }

  {
    int hi = clamp_hi(6);
    if (r.lo > hi) {
      rep.checks.push_back(skip("theorem1-equality-family", 6));
    } else {
      bool ok = true;
      std::string bad;
      int checked = 0;
      for (int n = r.lo; n <= hi && ok; ++n) {
        std::uint64_t bound = 2 * factorial(n - 1);
        for (int p1 = 2; p1 <= n && ok; ++p1)
          for (int p2 = 2; p2 <= n && ok; ++p2) {
            if (p1 == p2) continue;
            if (g_M(make_uniform_pair_matrix(n, Rational(1), p1, p2)) != bound) {
              ok = false;
              bad = "uniform-pair (1, " + std::to_string(p1) + ", " + std::to_string(p2) +
                    ") at n = " + std::to_string(n) + " misses g = 2(n-1)!";
            }
            ++checked;
          }
        for (int q1 = 2; q1 <= n && ok; ++q1)
          for (int q2 = 2; q2 <= n && ok; ++q2) {
            if (q1 == q2) continue;
            for (int tau = 2; tau <= n && ok; ++tau) {
              if (g_M(make_single_row_matrix(n, Rational(1), q1, q2, tau)) != bound) {
                ok = false;
                bad = "single-row (1, " + std::to_string(q1) + ", " + std::to_string(q2) +
                      ", " + std::to_string(tau) + ") at n = " + std::to_string(n) +
                      " misses g = 2(n-1)!";
              }
              ++checked;
            }
          }
      }
      ranges["theorem1_equality_family"] = json::array({r.lo, hi});
      rep.checks.push_back(
          {"theorem1-equality-family", ok ? Check::Status::Pass : Check::Status::Fail,
           ok ? std::to_string(checked) + " template matrices for " +
                    detail::range_text(r.lo, hi) + ": g_M = 2(n-1)! exactly"
              : bad});
    }
  }

  rep.results = json{{"ranges", std::move(ranges)}};
  return rep;
}

inline Report cmd_min_support(const RunConfig& cfg) {
  int n = cfg.n != 0 ? cfg.n : 3;
  if (n < 3 || n > 6)
    throw std::invalid_argument("min-support: n out of [3, 6]: " + std::to_string(n));
  Report rep;
  rep.command = "min-support";
  rep.parameters = json{{"n", n}, {"seed", cfg.seed}, {"radius", cfg.radius}};
  std::uint64_t bound = 2 * factorial(n - 1);

  if (n == 3) {
    SearchResult s = min_support_exact_dim2();
    bool witness_ok = support(from_coefficients(s.witness)).count == s.best_support;
    bool ok = s.best_support == bound && s.is_proven_optimal && witness_ok;
    json optima = json::array();
    for (const CoefficientVector& c : s.optimal_witnesses)
      optima.push_back(coefficients_to_json(c));
    rep.results = json{{"method", "exact-dim2"},
                       {"n", n},
                       {"best_support", s.best_support},
                       {"bound", bound},
                       {"proven_optimal", s.is_proven_optimal},
                       {"witness", coefficients_to_json(s.witness)},
                       {"optimal_witnesses", std::move(optima)}};
    rep.checks.push_back(
        {"minimum-found", ok ? Check::Status::Pass : Check::Status::Fail,
         ok ? "minimum support " + std::to_string(s.best_support) + " = 2(n-1)!, proven optimal, " +
                  std::to_string(s.optimal_witnesses.size()) + " optimizing directions"
            : "exact search returned " + std::to_string(s.best_support) + " (bound " +
                  std::to_string(bound) + ", proven " + (s.is_proven_optimal ? "yes" : "no") +
                  ", witness " + (witness_ok ? "consistent" : "inconsistent") + ")"});
    return rep;
  }

  SearchResult s = min_support_grid(n, cfg.radius);
  bool witness_ok = support(from_coefficients(s.witness)).count == s.best_support;
  rep.results = json{{"method", "grid"},
                     {"n", n},
                     {"radius", cfg.radius},
                     {"best_support", s.best_support},
                     {"bound", bound},
                     {"proven_optimal", false},
                     {"witness", coefficients_to_json(s.witness)}};
  rep.checks.push_back({"heuristic-upper-bound", Check::Status::Info,
                        "best support found " + std::to_string(s.best_support) +
                            " at radius " + std::to_string(cfg.radius) + "; bound 2(n-1)! = " +
                            std::to_string(bound) + "; heuristic, not a certificate"});
  rep.checks.push_back({"witness-consistency",
                        witness_ok ? Check::Status::Pass : Check::Status::Fail,
                        witness_ok ? "witness support re-checks to " +
                                         std::to_string(s.best_support)
                                   : "witness support does not match the reported best"});
  if (s.best_support < bound)
    rep.checks.push_back({"below-theorem-bound", Check::Status::Fail,
                          "grid found support " + std::to_string(s.best_support) +
                              " below 2(n-1)! = " + std::to_string(bound) +
                              "; investigate immediately"});
  return rep;
}

inline Report cmd_fuzz_theorem1(const RunConfig& cfg) {
  int n = cfg.n != 0 ? cfg.n : 8;
  int cap = cfg.force_large_n ? kMaxEnumerationN : kMaxDefaultGmN;
  if (n < 3 || n > cap)
    throw std::invalid_argument("fuzz-theorem1: n out of [3, " + std::to_string(cap) +
                                "]: " + std::to_string(n));
  if (cfg.samples < 1) throw std::invalid_argument("fuzz-theorem1: samples must be >= 1");
  Report rep;
  rep.command = "fuzz-theorem1";
  rep.parameters = json{{"n", n},
                        {"samples", cfg.samples},
                        {"seed", cfg.seed},
                        {"force_large_n", cfg.force_large_n}};

  std::uint64_t bound = 2 * factorial(n - 1);
  std::uint64_t min_g = 0;
  int equality_count = 0;
  int bound_violations = 0;
  int inconsistent = 0;
  for (int s = 0; s < cfg.samples; ++s) {
    SquareMatrix M = random_special_matrix(n, cfg.seed + static_cast<std::uint64_t>(s));
    TheoremCheck t = check_theorem1(M, cfg.force_large_n);
    if (s == 0 || t.g < min_g) min_g = t.g;
    if (t.equality) ++equality_count;
    if (!t.bound_holds) ++bound_violations;
    if (!t.consistent) ++inconsistent;
  }
  rep.results = json{{"n", n},
                     {"samples", cfg.samples},
                     {"seed", cfg.seed},
                     {"bound", bound},
                     {"min_g", min_g},
                     {"equality_count", equality_count}};
  rep.checks.push_back(
      {"lower-bound", bound_violations == 0 ? Check::Status::Pass : Check::Status::Fail,
       bound_violations == 0
           ? "min g = " + std::to_string(min_g) + " >= 2(n-1)! = " + std::to_string(bound) +
                 " over " + std::to_string(cfg.samples) + " samples"
           : std::to_string(bound_violations) + " samples fall below 2(n-1)!"});
  rep.checks.push_back(
      {"equality-classification", inconsistent == 0 ? Check::Status::Pass : Check::Status::Fail,
       inconsistent == 0 ? std::to_string(equality_count) +
                               " equality cases, classification consistent throughout"
                         : std::to_string(inconsistent) + " samples contradict the equality "
                           "characterization"});
  return rep;
}

inline Report cmd_classify(const RunConfig& cfg) {
  if (cfg.matrix_file.empty())
    throw std::invalid_argument("classify: a matrix file is required");
  SquareMatrix M = load_matrix_file(cfg.matrix_file);
  if (M.n() < 3)
    throw std::invalid_argument("classify: matrices below n = 3 have no template forms");

  Report rep;
  rep.command = "classify";
  rep.parameters = json{{"matrix_file", cfg.matrix_file}, {"seed", cfg.seed}};

  SpecialCheck sc = is_special(M);
  json rows = json::array();
  for (int i = 1; i <= M.n(); ++i) {
    RowClass rc = classify_row(M, i);
    json row{{"row", i}, {"kind", detail::row_kind_tag(rc.kind)}};
    if (rc.kind == RowClass::Kind::Pair) {
      row["value"] = rational_to_json(rc.value);
      row["col1"] = rc.col1;
      row["col2"] = rc.col2;
    } else if (rc.kind == RowClass::Kind::Spread) {
      row["value"] = rational_to_json(rc.value);
      row["spike"] = rc.col1;
    }
    rows.push_back(std::move(row));
  }
  std::optional<int> theta = theta_uniform(M);
  MatrixClass mc = classify_matrix(M);

  json cls{{"kind", detail::class_kind_tag(mc.kind)}};
  std::string describe = detail::class_kind_tag(mc.kind);
  if (mc.kind == MatrixClass::Kind::UniformPair) {
    cls["x"] = rational_to_json(mc.x);
    cls["p1"] = mc.c1;
    cls["p2"] = mc.c2;
    describe += " (x = " + to_string(mc.x) + ", p1 = " + std::to_string(mc.c1) +
                ", p2 = " + std::to_string(mc.c2) + ")";
  } else if (mc.kind == MatrixClass::Kind::SingleRow) {
    cls["x"] = rational_to_json(mc.x);
    cls["q1"] = mc.c1;
    cls["q2"] = mc.c2;
    cls["tau"] = mc.tau;
    describe += " (x = " + to_string(mc.x) + ", q1 = " + std::to_string(mc.c1) +
                ", q2 = " + std::to_string(mc.c2) + ", tau = " + std::to_string(mc.tau) + ")";
  }

  rep.results = json{{"n", M.n()},
                     {"special", sc.ok},
                     {"violations", sc.violations},
                     {"rows", std::move(rows)},
                     {"theta", theta ? json(*theta) : json()},
                     {"class", std::move(cls)}};
  std::string det = describe + (sc.ok ? "" : "; not special");
  if (!sc.ok)
    for (const std::string& v : sc.violations) det += ", " + v;
  rep.checks.push_back({"classification", Check::Status::Info, det});
  return rep;
}

inline Report cmd_partition_check(const RunConfig& cfg) {
  detail::Range r = detail::resolve_range(cfg, 7, 12, 7, 50);
  Report rep;
  rep.command = "partition-check";
  rep.parameters = json{{"n", r.lo}, {"n_max", r.hi}, {"seed", cfg.seed}};

  json table = json::array();
  bool ok = true;
  std::string bad;
  for (int n = r.lo; n <= r.hi; ++n) {
    DichotomyResult d = partition_dichotomy_check(n);
    json exceptions = json::array();
    for (const IntPartition& p : d.exceptions) exceptions.push_back(p.parts);
    table.push_back(json{{"n", n}, {"holds", d.holds}, {"exceptions", std::move(exceptions)}});
    if (!d.holds && ok) {
      ok = false;
      bad = "n = " + std::to_string(n) + ": exceptions differ from (n-2, 1, 1)";
    }
  }
  rep.results = json{{"table", std::move(table)}};
  rep.checks.push_back({"dichotomy", ok ? Check::Status::Pass : Check::Status::Fail,
                        ok ? "exceptions are exactly (n-2, 1, 1) for " +
                                 detail::range_text(r.lo, r.hi)
                           : bad});
  return rep;
}

inline Report cmd_crc_check(const RunConfig& cfg) {
  detail::Range r = detail::resolve_range(cfg, 3, 5, 3, 7);
  Report rep;
  rep.command = "crc-check";
  rep.parameters = json{{"n", r.lo}, {"n_max", r.hi}, {"seed", cfg.seed}};

  json table = json::array();
  bool ok = true;
  std::string bad;
  int total = 0;
  for (int n = r.lo; n <= r.hi; ++n) {
    QuotientMatrix expected{{n - 2, 1, 0}, {1, 0, n - 2}, {0, 1, n - 2}};
    int matched = 0;
    int cosets = 0;
    for (int alpha = 2; alpha <= n; ++alpha)
      for (int a = 1; a <= n; ++a) {
        ++cosets;
        auto res = is_completely_regular(coset(a, alpha, n));
        if (res && res->rho == 2 && res->quotient == expected) {
          ++matched;
        } else if (ok) {
          ok = false;
          bad = "coset(a=" + std::to_string(a) + ", alpha=" + std::to_string(alpha) +
                ") at n = " + std::to_string(n) + " is off the expected quotient";
        }
      }
    total += cosets;
    table.push_back(json{{"n", n},
                         {"cosets", cosets},
                         {"matched", matched},
                         {"rho", 2},
                         {"expected_quotient", quotient_to_json(expected)}});
  }
  rep.results = json{{"table", std::move(table)}};
  rep.checks.push_back({"coset-family", ok ? Check::Status::Pass : Check::Status::Fail,
                        ok ? "all " + std::to_string(total) + " cosets for " +
                                 detail::range_text(r.lo, r.hi) +
                                 " are completely regular with rho = 2"
                           : bad});
  return rep;
}

inline Report run_command(const RunConfig& cfg) {
  if (cfg.command == "graph-stats") return cmd_graph_stats(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "min-support") return cmd_min_support(cfg);
  if (cfg.command == "fuzz-theorem1") return cmd_fuzz_theorem1(cfg);
  if (cfg.command == "classify") return cmd_classify(cfg);
  if (cfg.command == "partition-check") return cmd_partition_check(cfg);
  if (cfg.command == "crc-check") return cmd_crc_check(cfg);
  throw std::invalid_argument("unknown command \"" + cfg.command + "\"");
}

inline std::string status_tag(Check::Status s) {
  switch (s) {
    case Check::Status::Pass: return "pass";
    case Check::Status::Fail: return "fail";
    case Check::Status::Skip: return "skip";
    default: return "info";
  }
}

inline json report_to_json(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"status", status_tag(c.status)},
                          {"detail", c.detail}});
  return json{{"version", std::string(kVersion)},
              {"command", r.command},
              {"parameters", r.parameters},
              {"results", r.results},
              {"checks", std::move(checks)},
              {"passed", r.all_passed()}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace detail

// json is the canonical format; csv and text are projections of the check
// list.
inline std::string render_report(const Report& r, Format f) {
  switch (f) {
    case Format::Json:
      return report_to_json(r).dump(2) + "\n";
    case Format::Csv: {
      std::string out = "# stareig " + std::string(kVersion) + "\n";
      out += "command,check,status,detail\n";
      for (const Check& c : r.checks)
        out += r.command + "," + detail::csv_field(c.name) + "," + status_tag(c.status) +
               "," + detail::csv_field(c.detail) + "\n";
      return out;
    }
    default: {
      std::string out = "stareig " + std::string(kVersion) + " " + r.command + "\n";
      for (const Check& c : r.checks) {
        std::string tag = status_tag(c.status);
        for (char& ch : tag) ch = static_cast<char>(ch - 'a' + 'A');
        out += "[" + tag + "] " + c.name + ": " + c.detail + "\n";
      }
      out += "result: " + std::string(r.all_passed() ? "pass" : "fail") + "\n";
      return out;
    }
  }
}

}  // namespace stareig
