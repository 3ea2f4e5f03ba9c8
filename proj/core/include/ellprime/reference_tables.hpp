#pragma once

// Bundled reference data sets for the five example curve scans, and the
// machinery that recomputes each row and reports matches, mismatches and
// excluded (bad reduction) rows.

#include <string>
#include <vector>

#include "ellprime/elliptic_curve.hpp"

namespace ellprime {

struct ReferenceTable {
  int id = 0;
  CurveSpec curve;
  u64 divisor = 1;  // table lists n / divisor
  std::vector<std::pair<u64, u64>> rows;  // (p, expected n / divisor)
  // Brun partial-sum constant printed alongside the source table; archived
  // as an annotation. The scans do not reproduce these values.
  std::string published_brun;
};

/// Tables 1..5. DomainError outside that range.
const ReferenceTable& reference_table(int id);

enum class RowStatus { kMatch, kMismatch, kExcluded };

struct TableRowComparison {
  u64 p = 0;
  u64 expected = 0;
  u64 computed = 0;      // meaningful unless excluded
  RowStatus status = RowStatus::kMatch;
  std::string note;
};

struct TableComparison {
  int id = 0;
  CurveSpec curve;
  u64 divisor = 1;
  std::vector<TableRowComparison> rows;
  u64 matches = 0;
  u64 mismatches = 0;
  u64 excluded = 0;

  bool all_rows_match() const { return mismatches == 0; }
};

/// Recomputes every row of the table: order_naive / divisor against the
/// listed value; rows with p | Delta are reported excluded, not compared.
TableComparison reproduce_table(int id);

std::string table_comparison_text(const TableComparison& comparison);
std::string table_comparison_csv(const TableComparison& comparison);

}  // namespace ellprime
