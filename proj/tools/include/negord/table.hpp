#ifndef NEGORD_TABLE_HPP
#define NEGORD_TABLE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negord/families.hpp"

namespace negord {

enum class Format { csv, json, latex, text };

std::optional<Format> parse_format(std::string_view text);

/// Inclusive range a..b.
struct Range {
  long lo = 0;
  long hi = 0;
};

/// Accepts "a..b" or a single "a". Throws std::invalid_argument when
/// malformed, negative, or empty (b < a).
Range parse_range(std::string_view text);

/// Exact rational or the word "symbolic".
Lambda parse_lambda(std::string_view text);
std::string lambda_label(const Lambda& lambda);

struct TableSpec {
  std::string family;
  Range n{0, 9};
  Range k{0, 9};
  Lambda lambda = Rational(1);
  Rational x;
  Method method = Method::explicit_sum;
};

struct Table {
  std::string family;
  std::string lambda;  ///< lambda_label of the spec
  bool has_k = true;
  std::vector<long> ns;
  std::vector<long> ks;  ///< {0} when the family has no k
  std::vector<std::vector<Value>> cells;  ///< cells[row][col]
};

/// Throws std::invalid_argument for an unknown family or method and
/// std::domain_error when a cell cannot be evaluated at the given lambda.
Table build_table(const TableSpec& spec);

/// With annotate set, cells listed in the typo ledger carry the printed value.
std::string render(const Table& table, Format format, bool annotate = false);

std::string latex_value(const Value& v);

/// RFC 4180 subset: comma separated, double-quoted fields with "" escapes,
/// one record per '\n'-terminated line.
using CsvRows = std::vector<std::vector<std::string>>;
CsvRows parse_csv(std::string_view text);
std::string emit_csv(const CsvRows& rows);

}  // namespace negord

#endif  // NEGORD_TABLE_HPP
