#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statesurf/certify.hpp"
#include "statesurf/diagram.hpp"

namespace statesurf {

struct TableEntry {
  std::string name;
  std::string notation;
  LinkDiagram diagram;
  int line = 0;
  /// Set when an `@override` line replaced the original diagram.
  std::optional<std::string> override_reason;
  std::string original_notation;
};

struct TableDiagnostic {
  int line = 0;
  std::string message;
};

struct OverrideRecord {
  std::string name;
  std::string notation;
  std::string reason;
  int line = 0;
};

/// Parsed table file. Lines are `<name> <PD-or-DT>`; `#` starts a comment;
/// `@override <name> <notation>  # reason` swaps in an alternate diagram.
struct Table {
  std::string source;
  std::string hash;  // FNV-1a of the file bytes
  std::vector<TableEntry> entries;
  std::vector<TableDiagnostic> diagnostics;
  std::vector<OverrideRecord> overrides;
};

Table parse_table(std::string_view text, std::string source = {});
/// Throws std::runtime_error when the file cannot be read.
Table load_table(const std::filesystem::path& path);

struct StateVerdict {
  std::string name;
  State state;
  bool adequate = false;
  bool homogeneous = false;
  SurfaceInvariants surface;
  bool certifies() const noexcept { return adequate && homogeneous; }
};

struct EntryReport {
  std::string name;
  std::string fingerprint;
  int crossings = 0;
  bool overridden = false;
  Classification classification;
  /// plus, minus, seifert, checkerboard-black, checkerboard-white.
  std::vector<StateVerdict> canonical;
  /// Some state among plus/minus is adequate, homogeneous and not the
  /// Seifert state.
  bool non_seifert_certified = false;
  /// A checkerboard state certifies with a nonorientable surface.
  bool checkerboard_nonorientable = false;
};

struct BatchReport {
  std::string table;
  std::string table_hash;
  std::string check;  // empty for a plain batch run
  std::vector<EntryReport> entries;
  std::vector<std::string> exceptions;
  std::vector<std::string> checkerboard_flags;
  std::vector<std::string> expected_exceptions;
  std::vector<std::string> expected_checkerboard;
  std::optional<bool> exceptions_match;
  std::vector<OverrideRecord> overrides;
  std::vector<TableDiagnostic> diagnostics;
};

enum class RemarkTable { rolfsen10, ht11 };

std::optional<RemarkTable> remark_table_from_name(std::string_view name);
std::string_view remark_table_name(RemarkTable which);
/// Bundled table file name for a check.
std::string_view remark_table_file(RemarkTable which);

EntryReport analyze_entry(const TableEntry& entry);
BatchReport run_batch(const Table& table, int threads = 1);
BatchReport run_remark_check(const Table& table, RemarkTable which, int threads = 1);

}  // namespace statesurf
