#include "statesurf/table.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace statesurf {

namespace {

std::string_view strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::pair<std::string_view, std::string_view> split_first(std::string_view s) {
  const auto sp = s.find_first_of(" \t");
  if (sp == std::string_view::npos) return {s, {}};
  return {s.substr(0, sp), strip(s.substr(sp))};
}

}  // namespace

Table parse_table(std::string_view text, std::string source) {
  Table t;
  t.source = std::move(source);
  t.hash = fnv1a_hex(text);
  std::map<std::string, std::size_t> by_name;
  struct PendingOverride {
    OverrideRecord record;
  };
  std::vector<PendingOverride> pending;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string comment;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      comment = std::string(strip(raw.substr(hash + 1)));
      raw = raw.substr(0, hash);
    }
    const std::string_view line = strip(raw);
    if (line.empty()) continue;

    if (line.front() == '@') {
      auto [directive, rest] = split_first(line);
      if (directive != "@override") {
        t.diagnostics.push_back({line_no, "unknown directive " + std::string(directive)});
        continue;
      }
      auto [name, notation] = split_first(rest);
      if (name.empty() || notation.empty()) {
        t.diagnostics.push_back({line_no, "@override needs a name and a diagram"});
        continue;
      }
      pending.push_back({{std::string(name), std::string(notation), comment, line_no}});
      continue;
    }

    auto [name, notation] = split_first(line);
    if (notation.empty()) {
      t.diagnostics.push_back({line_no, "missing diagram after name '" + std::string(name) + "'"});
      continue;
    }
    if (by_name.count(std::string(name))) {
      t.diagnostics.push_back({line_no, "duplicate entry '" + std::string(name) + "'"});
      continue;
    }
    try {
      TableEntry e;
      e.name = std::string(name);
      e.notation = std::string(notation);
      e.original_notation = e.notation;
      e.diagram = parse_diagram(notation).with_name(e.name);
      e.line = line_no;
      by_name[e.name] = t.entries.size();
      t.entries.push_back(std::move(e));
    } catch (const ParseError& err) {
      t.diagnostics.push_back({line_no, std::string(name) + ": " + err.what()});
    }
  }

  for (const auto& p : pending) {
    const auto it = by_name.find(p.record.name);
    if (it == by_name.end()) {
      t.diagnostics.push_back({p.record.line, "@override for unknown entry '" + p.record.name + "'"});
      continue;
    }
    try {
      auto& e = t.entries[it->second];
      e.diagram = parse_diagram(p.record.notation).with_name(e.name);
      e.notation = p.record.notation;
      e.override_reason = p.record.reason;
      t.overrides.push_back(p.record);
    } catch (const ParseError& err) {
      t.diagnostics.push_back({p.record.line, p.record.name + ": " + err.what()});
    }
  }
  return t;
}

Table load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str(), path.filename().string());
}

std::optional<RemarkTable> remark_table_from_name(std::string_view name) {
  if (name == "rolfsen10") return RemarkTable::rolfsen10;
  if (name == "ht11") return RemarkTable::ht11;
  return std::nullopt;
}

std::string_view remark_table_name(RemarkTable which) {
  return which == RemarkTable::rolfsen10 ? "rolfsen10" : "ht11";
}

std::string_view remark_table_file(RemarkTable which) {
  return which == RemarkTable::rolfsen10 ? "rolfsen_upto10.tbl" : "ht11.tbl";
}

EntryReport analyze_entry(const TableEntry& entry) {
  const LinkDiagram& d = entry.diagram;
  EntryReport r;
  r.name = entry.name;
  r.fingerprint = fingerprint_hex(d);
  r.crossings = d.crossing_count();
  r.overridden = entry.override_reason.has_value();
  r.classification = classify(d);
  const State seifert = seifert_state(d);
  for (CanonicalState c : kCanonicalStates) {
    StateVerdict v;
    v.name = std::string(canonical_name(c));
    v.state = canonical_state(d, c);
    const StateGraph g = build_state_graph(d, v.state);
    v.adequate = is_adequate(g);
    v.homogeneous = is_homogeneous(g, blocks(g));
    v.surface = invariants(build_state_surface(d, v.state));
    const bool uniform = c == CanonicalState::plus || c == CanonicalState::minus;
    if (uniform && v.certifies() && !(v.state == seifert)) r.non_seifert_certified = true;
    const bool checker = c == CanonicalState::checkerboard_black || c == CanonicalState::checkerboard_white;
    if (checker && v.certifies() && !v.surface.orientable) r.checkerboard_nonorientable = true;
    r.canonical.push_back(std::move(v));
  }
  return r;
}

BatchReport run_batch(const Table& table, int threads) {
  BatchReport report;
  report.table = table.source;
  report.table_hash = table.hash;
  report.overrides = table.overrides;
  report.diagnostics = table.diagnostics;
  report.entries.resize(table.entries.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < table.entries.size(); i = next++)
      report.entries[i] = analyze_entry(table.entries[i]);
  };
  const int n = std::max(1, threads);
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (const auto& e : report.entries) {
    if (e.non_seifert_certified) continue;
    report.exceptions.push_back(e.name);
    if (e.checkerboard_nonorientable) report.checkerboard_flags.push_back(e.name);
  }
  return report;
}

BatchReport run_remark_check(const Table& table, RemarkTable which, int threads) {
  BatchReport report = run_batch(table, threads);
  report.check = std::string(remark_table_name(which));
  if (which == RemarkTable::rolfsen10) {
    report.expected_exceptions = {"8_19", "10_124", "10_128", "10_134", "10_139", "10_142"};
    report.expected_checkerboard = {"10_134", "10_142"};
  } else {
    report.expected_exceptions = {"K11n93",  "K11n95",  "K11n118", "K11n126", "K11n136",
                                  "K11n169", "K11n171", "K11n180", "K11n181"};
    report.expected_checkerboard = {"K11n93",  "K11n95",  "K11n136", "K11n169",
                                    "K11n171", "K11n180", "K11n181"};
  }
  report.exceptions_match = report.exceptions == report.expected_exceptions;
  return report;
}

}  // namespace statesurf
