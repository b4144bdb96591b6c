#pragma once

// BraceDocument: a brace as JSON,
//   {"p": 2, "moduli": [2, 4], "table": [[...], ...],
//    "name": ..., "socle_order": ..., "mult_group": ..., "entry_id": ...}
// with the last four keys optional. Annotations are re-derived on load.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braces/brace.hpp"

namespace braces {

/// Malformed JSON, missing keys, wrong table dimensions or out-of-range entries.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BraceDocument {
  int p = 2;
  std::vector<std::int64_t> moduli;
  std::vector<std::vector<int>> table;
  std::optional<std::string> name;
  std::optional<int> socle_order;
  std::optional<std::string> mult_group;
  std::optional<std::string> entry_id;

  bool operator==(const BraceDocument&) const = default;
};

/// Document with all annotations filled from B; entry_id as given.
BraceDocument document_from_brace(const Brace& B, std::optional<std::string> entry_id = std::nullopt);

std::string serialize_document(const BraceDocument& d, int indent = -1);
BraceDocument parse_document(const std::string& text);
BraceDocument read_document(const std::string& path);

struct LoadResult {
  /// set when the table is a valid brace
  std::optional<Brace> brace;
  /// table axioms first; in strict mode an annotation mismatch is a violation
  VerifyReport report;
  /// annotation mismatches in lenient mode
  std::vector<std::string> warnings;
};

/// Validates shape (DocumentError), then the brace axioms, then re-derives
/// socle_order and mult_group and compares them with the annotations.
LoadResult load_document(const BraceDocument& d, bool strict = true);

}  // namespace braces
