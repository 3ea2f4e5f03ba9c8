#include "ellprime/reference_tables.hpp"

#include <array>
#include <sstream>

#include "ellprime/order_counting.hpp"

namespace ellprime {

namespace {

std::vector<ReferenceTable> make_tables() {
  std::vector<ReferenceTable> tables(5);

  tables[0] = {1,
               {0, 2, "1728.n4"},
               1,
               {{3, 3},     {13, 19},   {19, 13},   {61, 61},  {67, 73},
                {73, 81},   {139, 163}, {163, 139}, {211, 199}, {331, 331},
                {349, 313}, {541, 571}, {547, 571}, {571, 541}, {613, 661},
                {661, 613}, {757, 787}, {829, 823}, {877, 937}},
               ".520067922"};

  tables[1] = {2,
               {6, -2, "1728.w1"},
               1,
               {{3, 3},     {7, 7},     {97, 97},   {103, 107}, {181, 163},
                {271, 293}, {313, 331}, {367, 383}, {409, 397}, {487, 499},
                {883, 853}, {967, 941}},
               ".186641187"};

  tables[2] = {3,
               {-1, 0, "32.a3"},
               4,
               {{5, 2},     {7, 2},     {11, 3},    {19, 5},    {43, 11},
                {67, 17},   {163, 41},  {211, 53},  {283, 71},  {331, 83},
                {523, 131}, {547, 137}, {691, 173}, {787, 197}, {907, 227}},
               ".549568584"};

  tables[3] = {4,
               {-1, 0, "32.a3"},
               8,
               {{17, 2},   {23, 3},   {29, 5},   {37, 5},   {53, 5},
                {101, 13}, {103, 13}, {109, 13}, {149, 17}, {151, 19},
                {157, 17}, {277, 37}, {293, 37}, {317, 41}, {389, 37},
                {487, 53}, {541, 61}, {631, 73}, {661, 79}, {701, 89},
                {757, 97}, {773, 101}, {797, 97}, {821, 109}, {823, 103},
                {829, 97}, {853, 101}},
               ".2067391731"};

  tables[4] = {5,
               {0, 1, ""},
               12,
               {{31, 3},   {43, 3},   {59, 5},   {67, 7},   {73, 7},
                {79, 7},   {97, 7},   {103, 7},  {131, 11}, {139, 13},
                {151, 13}, {163, 13}, {181, 13}, {199, 19}, {227, 19},
                {241, 19}, {337, 31}, {367, 31}, {379, 31}, {409, 31},
                {421, 37}, {443, 37}, {463, 37}, {487, 37}, {491, 41},
                {523, 43}, {563, 47}, {709, 61}, {751, 67}, {787, 61},
                {823, 73}, {829, 73}, {859, 67}, {883, 73}, {907, 79},
                {947, 79}, {967, 79}, {991, 79}},
               ".5495685884"};

  return tables;
}

}  // namespace

const ReferenceTable& reference_table(int id) {
  static const std::vector<ReferenceTable> tables = make_tables();
  if (id < 1 || id > 5)
    throw DomainError("reference_table: id must be in 1..5");
  return tables[id - 1];
}

TableComparison reproduce_table(int id) {
  const ReferenceTable& table = reference_table(id);
  TableComparison result;
  result.id = table.id;
  result.curve = table.curve;
  result.divisor = table.divisor;
  const i64 delta = discriminant(table.curve);

  for (const auto& [p, expected] : table.rows) {
    TableRowComparison row;
    row.p = p;
    row.expected = expected;
    if (delta % static_cast<i64>(p) == 0) {
      row.status = RowStatus::kExcluded;
      row.note = "excluded (bad reduction)";
      ++result.excluded;
    } else {
      const u64 n = order_naive(reduce(table.curve, p));
      row.computed = (n % table.divisor == 0) ? n / table.divisor : 0;
      if (n % table.divisor == 0 && row.computed == expected) {
        row.status = RowStatus::kMatch;
        ++result.matches;
      } else {
        row.status = RowStatus::kMismatch;
        std::ostringstream note;
        note << "computed #E = " << n;
        if (table.divisor > 1) note << ", /" << table.divisor;
        row.note = note.str();
        ++result.mismatches;
      }
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string table_comparison_text(const TableComparison& comparison) {
  std::ostringstream out;
  out << "table " << comparison.id << "  curve "
      << curve_to_string(comparison.curve) << "  divisor "
      << comparison.divisor << "\n";
  out << "    p  expected  computed  status\n";
  for (const auto& row : comparison.rows) {
    out.width(5);
    out << row.p;
    out.width(10);
    out << row.expected;
    out.width(10);
    if (row.status == RowStatus::kExcluded)
      out << "-";
    else
      out << row.computed;
    out << "  ";
    switch (row.status) {
      case RowStatus::kMatch: out << "match"; break;
      case RowStatus::kMismatch: out << "MISMATCH (" << row.note << ")"; break;
      case RowStatus::kExcluded: out << row.note; break;
    }
    out << "\n";
  }
  out << "matches " << comparison.matches << ", mismatches "
      << comparison.mismatches << ", excluded " << comparison.excluded << "\n";
  return out.str();
}

std::string table_comparison_csv(const TableComparison& comparison) {
  std::ostringstream out;
  out << "table,p,expected,computed,status\n";
  for (const auto& row : comparison.rows) {
    out << comparison.id << ',' << row.p << ',' << row.expected << ',';
    if (row.status == RowStatus::kExcluded)
      out << "";
    else
      out << row.computed;
    out << ',';
    switch (row.status) {
      case RowStatus::kMatch: out << "match"; break;
      case RowStatus::kMismatch: out << "mismatch"; break;
      case RowStatus::kExcluded: out << "excluded"; break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ellprime
