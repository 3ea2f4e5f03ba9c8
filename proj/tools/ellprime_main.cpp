// ellprime: elliptic group orders, Koblitz-prime scans, density constants,
// and the bundled verification suites, from the command line.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ellprime/densities.hpp"
#include "ellprime/division_polynomials.hpp"
#include "ellprime/elliptic_characters.hpp"
#include "ellprime/elliptic_curve.hpp"
#include "ellprime/koblitz_scan.hpp"
#include "ellprime/order_counting.hpp"
#include "ellprime/prime_measures.hpp"
#include "ellprime/reference_tables.hpp"

namespace {

using namespace ellprime;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBounds = 3;

enum class Format { kText, kCsv, kJsonl };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "csv") return Format::kCsv;
  if (name == "jsonl") return Format::kJsonl;
  throw CLI::ValidationError("--format must be text, csv or jsonl");
}

std::string twelve_digits(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::filesystem::path cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("ELLPRIME_CACHE_DIR")) return env;
  return std::filesystem::current_path();
}

ScanCache load_or_create(const CurveSpec& spec,
                         const std::filesystem::path& dir) {
  ScanCache cache(spec);
  const std::filesystem::path file = dir / cache.file_name();
  if (std::filesystem::exists(file)) return ScanCache::load(file);
  return cache;
}

int cmd_order(const std::string& curve_text, u64 p, Format format) {
  const CurveSpec spec = parse_curve(curve_text);
  const ReducedCurve curve = reduce(spec, p);
  const u64 n = group_order(curve);
  const i64 ap = static_cast<i64>(p) + 1 - static_cast<i64>(n);
  switch (format) {
    case Format::kText:
      std::printf("p=%llu n=%llu ap=%lld\n", (unsigned long long)p,
                  (unsigned long long)n, (long long)ap);
      break;
    case Format::kCsv:
      std::printf("p,n,ap\n%llu,%llu,%lld\n", (unsigned long long)p,
                  (unsigned long long)n, (long long)ap);
      break;
    case Format::kJsonl: {
      json row{{"p", p}, {"n", n}, {"ap", ap}};
      std::printf("%s\n", row.dump().c_str());
      break;
    }
  }
  return kExitOk;
}

int cmd_scan(const std::string& curve_text, u64 x, u64 t, Format format,
             const std::string& cache_flag) {
  const CurveSpec spec = parse_curve(curve_text);
  const std::filesystem::path dir = cache_dir(cache_flag);
  ScanCache cache = load_or_create(spec, dir);
  if (x > cache.high_water()) {
    scan(spec, x, cache);
    std::filesystem::create_directories(dir);
    cache.save(dir / cache.file_name());
  }
  const auto hits = koblitz_hits(cache, x, t);
  const BrunPartialSum brun = brun_partial_sum(cache, x, t);

  switch (format) {
    case Format::kText:
      std::printf("%8s %8s %8s\n", "p", "n", t == 1 ? "n" : "n/t");
      for (const auto& r : hits)
        std::printf("%8llu %8llu %8llu\n", (unsigned long long)r.p,
                    (unsigned long long)r.n, (unsigned long long)(r.n / t));
      std::printf("count %zu\n", hits.size());
      std::printf("brun partial sum %s\n", brun.decimal(12).c_str());
      break;
    case Format::kCsv:
      std::printf("p,n,quotient\n");
      for (const auto& r : hits)
        std::printf("%llu,%llu,%llu\n", (unsigned long long)r.p,
                    (unsigned long long)r.n, (unsigned long long)(r.n / t));
      std::printf("# count=%zu brun=%s\n", hits.size(),
                  brun.decimal(12).c_str());
      break;
    case Format::kJsonl: {
      for (const auto& r : hits) {
        json row{{"p", r.p}, {"n", r.n}, {"quotient", r.n / t}};
        std::printf("%s\n", row.dump().c_str());
      }
      json summary{{"count", hits.size()}, {"brun", brun.decimal(12)}};
      std::printf("%s\n", summary.dump().c_str());
      break;
    }
  }
  return kExitOk;
}

int cmd_density(const std::string& kind, u64 cutoff, i64 D, Format format) {
  DensityResult result;
  if (kind == "P0") {
    result = koblitz_constant(cutoff);
  } else if (kind == "serre") {
    result = delta_serre(D, cutoff);
  } else if (kind == "cm4") {
    result = delta_cm_quartic(cutoff);
  } else {
    std::fprintf(stderr, "unknown density kind: %s\n", kind.c_str());
    return kExitUsage;
  }
  switch (format) {
    case Format::kText:
      std::printf("value %s\ncutoff %llu\ntail bound %s\n",
                  twelve_digits(result.value).c_str(),
                  (unsigned long long)result.prime_cutoff,
                  twelve_digits(result.tail_bound).c_str());
      break;
    case Format::kCsv:
      std::printf("value,cutoff,tail_bound\n%s,%llu,%s\n",
                  twelve_digits(result.value).c_str(),
                  (unsigned long long)result.prime_cutoff,
                  twelve_digits(result.tail_bound).c_str());
      break;
    case Format::kJsonl: {
      json row{{"value", twelve_digits(result.value)},
               {"cutoff", result.prime_cutoff},
               {"tail_bound", twelve_digits(result.tail_bound)}};
      std::printf("%s\n", row.dump().c_str());
      break;
    }
  }
  return kExitOk;
}

int cmd_survey(u64 from, u64 to, Format format) {
  const SurveyResult survey = short_interval_survey(from, to);
  if (format == Format::kCsv) {
    std::fputs(survey_to_csv(survey).c_str(), stdout);
  } else if (format == Format::kJsonl) {
    for (const auto& r : survey.reports) {
      json row{{"p", r.center},          {"lo", r.lo},
               {"hi", r.hi},             {"lambda_sum", r.lambda_sum},
               {"threshold", r.threshold}, {"pass", r.pass}};
      std::printf("%s\n", row.dump().c_str());
    }
    json summary{{"primes", survey.reports.size()},
                 {"exceptions", survey.exceptions}};
    std::printf("%s\n", summary.dump().c_str());
  } else {
    for (const auto& r : survey.reports) {
      std::printf("p=%llu [%llu, %llu] sum=%.6f threshold=%.6f %s\n",
                  (unsigned long long)r.center, (unsigned long long)r.lo,
                  (unsigned long long)r.hi, r.lambda_sum, r.threshold,
                  r.pass ? "pass" : "FAIL");
    }
    std::printf("primes %zu, exceptions %llu\n", survey.reports.size(),
                (unsigned long long)survey.exceptions);
  }
  return kExitOk;
}

int cmd_table(int id, Format format) {
  const TableComparison cmp = reproduce_table(id);
  if (format == Format::kCsv) {
    std::fputs(table_comparison_csv(cmp).c_str(), stdout);
  } else if (format == Format::kJsonl) {
    for (const auto& row : cmp.rows) {
      json j{{"table", cmp.id},
             {"p", row.p},
             {"expected", row.expected},
             {"status", row.status == RowStatus::kMatch      ? "match"
                        : row.status == RowStatus::kMismatch ? "mismatch"
                                                             : "excluded"}};
      if (row.status != RowStatus::kExcluded) j["computed"] = row.computed;
      std::printf("%s\n", j.dump().c_str());
    }
  } else {
    std::fputs(table_comparison_text(cmp).c_str(), stdout);
    const ReferenceTable& table = reference_table(id);
    BrunPartialSum rows;
    rows.exact = 0;
    for (const auto& row : table.rows) rows.exact += BigRational(1, row.first);
    const bool rows_match =
        std::abs(std::stod(table.published_brun) -
                 rows.exact.convert_to<double>()) < 5e-9;
    std::printf(
        "archived brun constant %s (%s; row reciprocal sum %s, not "
        "reproduced by scan data)\n",
        table.published_brun.c_str(),
        rows_match ? "equals this table's own row sum"
                   : "matches neither this table's row sum nor the scan",
        rows.decimal(12).c_str());
  }
  return cmp.all_rows_match() ? kExitOk : kExitFailure;
}

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

void print_check_items(const std::vector<CheckItem>& items, Format format) {
  for (const auto& item : items) {
    switch (format) {
      case Format::kText:
        std::printf("%s %s — %s\n", item.pass ? "PASS" : "FAIL",
                    item.name.c_str(), item.detail.c_str());
        break;
      case Format::kCsv:
        std::printf("%s,%s,\"%s\"\n", item.name.c_str(),
                    item.pass ? "pass" : "fail", item.detail.c_str());
        break;
      case Format::kJsonl: {
        json row{{"item", item.name}, {"pass", item.pass},
                 {"detail", item.detail}};
        std::printf("%s\n", row.dump().c_str());
        break;
      }
    }
  }
}

std::vector<CheckItem> check_psi() {
  u64 curves = 0, points = 0, mismatches = 0;
  const PrimeSieve primes(100);
  for (u32 p : primes.primes()) {
    if (p < 5) continue;
    for (u64 a = 0; a < p; ++a) {
      for (u64 b = 0; b < p; ++b) {
        const u64 disc =
            (4 * mul_mod(mul_mod(a, a, p), a, p) + 27 * mul_mod(b, b, p)) % p;
        if (disc == 0) continue;
        const ReducedCurve c{p, a, b};
        const auto pts = enumerate_points(c);
        const u64 n = pts.size();
        const Factorization fac = factorize(n);
        const auto base = find_primitive_point(c, n, fac);
        if (!base) continue;
        const LogTable table(c, *base, n);
        ++curves;
        for (const auto& pt : pts) {
          const int truth = point_order(c, pt, n, fac) == n ? 1 : 0;
          if (psi_divisor(table, pt, fac) != truth ||
              psi_divisor_free(table, pt) != truth)
            ++mismatches;
          ++points;
        }
      }
    }
  }
  CheckItem item;
  item.name = "psi.three_way_equivalence";
  item.pass = mismatches == 0 && curves > 0;
  item.detail = std::to_string(curves) + " cyclic curves, " +
                std::to_string(points) + " points, " +
                std::to_string(mismatches) + " mismatches";
  return {item};
}

std::vector<CheckItem> check_tables() {
  std::vector<CheckItem> items;
  for (int id = 1; id <= 5; ++id) {
    const TableComparison cmp = reproduce_table(id);
    CheckItem item;
    item.name = "tables." + std::to_string(id);
    item.pass = cmp.all_rows_match();
    item.detail = std::to_string(cmp.matches) + " match, " +
                  std::to_string(cmp.mismatches) + " mismatch, " +
                  std::to_string(cmp.excluded) + " excluded";
    if (!item.pass) {
      for (const auto& row : cmp.rows) {
        if (row.status == RowStatus::kMismatch)
          item.detail += "; p=" + std::to_string(row.p) + " expected " +
                         std::to_string(row.expected) + " computed " +
                         std::to_string(row.computed);
      }
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<CheckItem> check_intervals() {
  std::vector<CheckItem> items;
  const LambdaSummer summer(10'000'000 + isqrt_u64(16 * 10'000'000ull) + 1);

  const SurveyResult survey = short_interval_survey(10'000, 1'000'000, summer);
  CheckItem sv;
  sv.name = "intervals.survey_1e4_1e6";
  sv.pass = survey.exceptions == 0;
  sv.detail = std::to_string(survey.reports.size()) + " primes, " +
              std::to_string(survey.exceptions) + " exceptions";
  items.push_back(std::move(sv));

  u64 x = 100;
  for (int i = 0; i < 6; ++i, x *= 10) {
    const BrunTitchmarshReport r = brun_titchmarsh_check(x, summer);
    CheckItem item;
    item.name = "intervals.prime_gap_1e" + std::to_string(2 + i);
    item.pass = r.pass;
    item.detail = "count " + std::to_string(r.prime_count) + " <= bound " +
                  twelve_digits(r.bound);
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<CheckItem> check_lseries() {
  std::vector<CheckItem> items;
  const std::vector<i64> bachet{1, 0, 0, 0, 0, 0, -1, 0, 0, 0,
                                0, 0, -5, 0, 0, 0, 0, 0, 7, 0};
  const std::vector<i64> noncm{1, 0, 0, 0, 2, 0, 1, 0, 0, 0,
                               2, 0, -1, 0, 0, 0, -6, 0, 5, 0};
  CheckItem e1;
  e1.name = "lseries.expansion_0_2";
  e1.pass = lseries_coeffs({0, 2, ""}, 20) == bachet;
  e1.detail = e1.pass ? "a_n for n <= 20 exact" : "coefficient mismatch";
  items.push_back(std::move(e1));

  CheckItem e2;
  e2.name = "lseries.expansion_6_-2";
  e2.pass = lseries_coeffs({6, -2, ""}, 20) == noncm;
  e2.detail = e2.pass ? "a_n for n <= 20 exact" : "coefficient mismatch";
  items.push_back(std::move(e2));

  u64 violations = 0, pairs = 0;
  for (const CurveSpec& spec : {CurveSpec{0, 2, ""}, CurveSpec{6, -2, ""}}) {
    const auto a = lseries_coeffs(spec, 300);
    for (u64 m = 2; m <= 300; ++m)
      for (u64 nn = 2; m * nn <= 300; ++nn) {
        if (std::gcd(m, nn) != 1) continue;
        if (a[m * nn - 1] != a[m - 1] * a[nn - 1]) ++violations;
        ++pairs;
      }
  }
  CheckItem mul;
  mul.name = "lseries.multiplicativity";
  mul.pass = violations == 0;
  mul.detail = std::to_string(pairs) + " coprime pairs, " +
               std::to_string(violations) + " violations";
  items.push_back(std::move(mul));
  return items;
}

int cmd_check(const std::string& suite, Format format) {
  std::vector<CheckItem> items;
  if (suite == "psi") {
    items = check_psi();
  } else if (suite == "tables") {
    items = check_tables();
  } else if (suite == "intervals") {
    items = check_intervals();
  } else if (suite == "lseries") {
    items = check_lseries();
  } else {
    std::fprintf(stderr, "unknown check suite: %s\n", suite.c_str());
    return kExitUsage;
  }
  print_check_items(items, format);
  const bool all_pass =
      std::all_of(items.begin(), items.end(),
                  [](const CheckItem& item) { return item.pass; });
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elliptic group orders, Koblitz-prime scans and densities"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format appear after the subcommand too

  std::string curve_text, cache_flag, format_name = "text";
  u64 p_value = 0, x_value = 1000, t_value = 1, cutoff = 1'000'000;
  u64 survey_from = 10'000, survey_to = 20'000;
  i64 big_d = -3;
  int table_id = 1;
  std::string density_kind, check_suite;

  app.add_option("--format", format_name, "text, csv or jsonl")
      ->capture_default_str();

  auto* order_cmd = app.add_subcommand("order", "group order at one prime");
  order_cmd->add_option("--curve", curve_text, "curve \"a,b\"")->required();
  order_cmd->add_option("--p", p_value, "prime of good reduction")->required();

  auto* scan_cmd =
      app.add_subcommand("scan", "Koblitz primes with t | n and n/t prime");
  scan_cmd->add_option("--curve", curve_text, "curve \"a,b\"")->required();
  scan_cmd->add_option("--x", x_value, "scan bound")->capture_default_str();
  scan_cmd->add_option("--t", t_value, "divisor t >= 1")
      ->capture_default_str();
  scan_cmd->add_option("--cache", cache_flag,
                       "cache directory (default: ELLPRIME_CACHE_DIR or cwd)");

  auto* density_cmd = app.add_subcommand("density", "density constants");
  density_cmd->add_option("kind", density_kind, "P0, serre or cm4")
      ->required();
  density_cmd->add_option("--cutoff", cutoff, "prime cutoff")
      ->capture_default_str();
  density_cmd->add_option("--D", big_d, "field discriminant for serre")
      ->capture_default_str();

  auto* survey_cmd =
      app.add_subcommand("survey", "short-interval weighted prime sums");
  survey_cmd->add_option("--from", survey_from, "lower bound")
      ->capture_default_str();
  survey_cmd->add_option("--to", survey_to, "upper bound")
      ->capture_default_str();

  auto* table_cmd =
      app.add_subcommand("table", "recompute one bundled reference table");
  table_cmd->add_option("--id", table_id, "table id 1..5")->required();

  auto* check_cmd = app.add_subcommand("check", "verification suites");
  check_cmd->add_option("suite", check_suite,
                        "psi, tables, intervals or lseries")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = parse_format(format_name);
    if (order_cmd->parsed()) return cmd_order(curve_text, p_value, format);
    if (scan_cmd->parsed()) {
      if (t_value < 1) {
        std::fprintf(stderr, "--t must be >= 1\n");
        return kExitUsage;
      }
      return cmd_scan(curve_text, x_value, t_value, format, cache_flag);
    }
    if (density_cmd->parsed())
      return cmd_density(density_kind, cutoff, big_d, format);
    if (survey_cmd->parsed()) return cmd_survey(survey_from, survey_to, format);
    if (table_cmd->parsed()) return cmd_table(table_id, format);
    if (check_cmd->parsed()) return cmd_check(check_suite, format);
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  } catch (const BoundsError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitBounds;
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitFailure;
  }
}
