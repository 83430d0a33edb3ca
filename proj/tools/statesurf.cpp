// statesurf: command-line front end for the state-surface library.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "statesurf/certify.hpp"
#include "statesurf/json.hpp"
#include "statesurf/table.hpp"

#ifndef STATESURF_DATA_DIR
#define STATESURF_DATA_DIR "data"
#endif

using namespace statesurf;

namespace {

enum class Format { json, csv, text };

struct DiagramArgs {
  std::string pd;
  std::string dt;
  std::string name;

  void add(CLI::App* app) {
    auto* p = app->add_option("--pd", pd, "diagram in PD notation");
    auto* d = app->add_option("--dt", dt, "knot diagram as a DT code");
    p->excludes(d);
    app->add_option("--name", name, "label carried into the report");
  }

  LinkDiagram load() const {
    if (pd.empty() && dt.empty()) throw CLI::RequiredError("--pd or --dt");
    LinkDiagram d = pd.empty() ? parse_dt(dt) : parse_pd(pd);
    return name.empty() ? d : d.with_name(name);
  }
};

void add_format(CLI::App* app, Format& f) {
  app->add_option("--format", f, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}},
          CLI::ignore_case))
      ->default_str("json");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return join(s, sep);
}

std::string sign_text(const std::optional<Sign>& s) { return s ? std::string(1, to_char(*s)) : "mixed"; }

std::string surface_text(const SurfaceInvariants& s) {
  std::ostringstream os;
  os << "chi=" << s.euler_characteristic << " " << (s.orientable ? "orientable" : "nonorientable")
     << " boundary=" << s.boundary_components << " " << (s.orientable ? "genus=" : "crosscap=")
     << s.genus_or_crosscap;
  if (!s.connected) os << " (disconnected)";
  return os.str();
}

void print_certificate(const Certificate& c, Format f, std::ostream& os) {
  switch (f) {
    case Format::json: os << to_json(c).dump(2) << "\n"; break;
    case Format::csv:
      os << "diagram,state,adequate,homogeneous,blocks,chi,orientable,boundary,genus_or_crosscap,essential,neuwirth\n"
         << c.diagram << ',' << c.state.to_string() << ',' << c.adequacy.adequate << ',' << c.homogeneous << ','
         << c.blocks.size() << ',' << c.surface.euler_characteristic << ',' << c.surface.orientable << ','
         << c.surface.boundary_components << ',' << c.surface.genus_or_crosscap << ',' << c.essential << ','
         << (c.neuwirth ? std::to_string(*c.neuwirth) : "") << "\n";
      break;
    case Format::text:
      os << "diagram    " << c.diagram << (c.name.empty() ? "" : "  (" + c.name + ")") << "\n"
         << "state      " << c.state.to_string()
         << (c.state_names.empty() ? "" : "  [" + join(c.state_names, ", ") + "]") << "\n"
         << "adequate   " << yes_no(c.adequacy.adequate);
      if (!c.adequacy.offending.empty()) os << "  offending crossings: " << join(c.adequacy.offending, " ");
      os << "\nhomogeneous " << yes_no(c.homogeneous) << "\n";
      for (std::size_t i = 0; i < c.blocks.size(); ++i)
        os << "  block " << i << "  edges {" << join(c.blocks[i].edges, ",") << "}  sign "
           << sign_text(c.blocks[i].sign) << "  factor " << surface_text(c.blocks[i].factor) << "\n";
      os << "surface    " << surface_text(c.surface) << "\n"
         << "essential  " << yes_no(c.essential) << "\n";
      if (c.neuwirth) os << "neuwirth   " << yes_no(*c.neuwirth) << "\n";
      if (!c.decision.empty()) os << "decision   " << c.decision << " (" << c.search_tier << " search)\n";
      break;
  }
}

void print_batch(const BatchReport& r, Format f, std::ostream& os) {
  if (f == Format::json) {
    os << to_json(r).dump(2) << "\n";
    return;
  }
  if (f == Format::csv) {
    os << "name,crossings,alternating,positive,plus,minus,seifert,checkerboard_black,checkerboard_white,"
          "non_seifert_certified,checkerboard_nonorientable,overridden\n";
    for (const auto& e : r.entries) {
      os << e.name << ',' << e.crossings << ',' << e.classification.diagram.alternating << ','
         << e.classification.diagram.positive;
      for (const auto& v : e.canonical) os << ',' << v.certifies();
      os << ',' << e.non_seifert_certified << ',' << e.checkerboard_nonorientable << ',' << e.overridden << "\n";
    }
    return;
  }
  os << "table      " << r.table << "  (hash " << r.table_hash << ", " << r.entries.size() << " entries)\n";
  for (const auto& o : r.overrides) os << "override   " << o.name << " -> " << o.notation << "  # " << o.reason << "\n";
  for (const auto& d : r.diagnostics) os << "line " << d.line << ": " << d.message << "\n";
  os << "exceptions " << join(r.exceptions, " ") << "\n"
     << "checkerboard flags " << (r.checkerboard_flags.empty() ? "(none)" : join(r.checkerboard_flags, " ")) << "\n";
  if (r.exceptions_match) {
    os << "expected   " << join(r.expected_exceptions, " ") << "\n"
       << "match      " << yes_no(*r.exceptions_match) << "\n";
  }
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman-state surfaces, adequacy and homogeneity certificates for link diagrams"};
  app.require_subcommand(1);
  Format format = Format::json;

  DiagramArgs analyze_args;
  std::string analyze_state = "seifert";
  bool with_surface = false;
  auto* analyze = app.add_subcommand("analyze", "certificate for one diagram and one state");
  analyze_args.add(analyze);
  analyze->add_option("--state", analyze_state,
                       "sign string or plus|minus|seifert|checkerboard-black|checkerboard-white")
      ->default_str("seifert");
  analyze->add_flag("--surface", with_surface, "include the ribbon surface (json only)");
  add_format(analyze, format);

  DiagramArgs search_args;
  SearchOptions search_opts;
  auto* search = app.add_subcommand("search", "adequate and homogeneous states");
  search_args.add(search);
  search->add_flag("--exhaustive", search_opts.exhaustive, "scan all 2^n states");
  search->add_flag("--exclude-seifert", search_opts.exclude_seifert, "skip the Seifert state");
  search->add_option("--max-crossings", search_opts.max_crossings, "exhaustive search cap")->default_val(24);
  search->add_flag("--force", search_opts.force, "lift the exhaustive search cap");
  search->add_option("--threads", search_opts.threads, "worker threads")->default_val(1);
  add_format(search, format);

  DiagramArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "diagram class tags");
  classify_args.add(classify_cmd);
  add_format(classify_cmd, format);

  DiagramArgs decide_args;
  std::string decide_kind = "both";
  DecideOptions decide_opts;
  auto* decide = app.add_subcommand("decide", "triviality and splitness, when a certifying state exists");
  decide_args.add(decide);
  decide->add_option("--kind", decide_kind, "trivial|split|both")
      ->check(CLI::IsMember({"trivial", "split", "both"}))
      ->default_str("both");
  decide->add_flag("!--no-exhaustive", decide_opts.exhaustive_fallback, "canonical states only");
  add_format(decide, format);

  std::string batch_table;
  int threads = 0;
  auto* batch = app.add_subcommand("batch", "analyze every entry of a table file");
  batch->add_option("table", batch_table, "table file")->required()->check(CLI::ExistingFile);
  batch->add_option("--threads", threads, "worker threads (0 = all cores)");
  add_format(batch, format);

  std::string which_name;
  std::string remark_table_path;
  std::string data_dir = STATESURF_DATA_DIR;
  auto* remark = app.add_subcommand("remark-check", "exception lists over a bundled knot table");
  remark->add_option("which", which_name, "rolfsen10|ht11")->required()->check(CLI::IsMember({"rolfsen10", "ht11"}));
  remark->add_option("--table", remark_table_path, "use this table file instead of the bundled one");
  remark->add_option("--data-dir", data_dir, "directory of bundled tables");
  remark->add_option("--threads", threads, "worker threads (0 = all cores)");
  add_format(remark, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      const LinkDiagram d = analyze_args.load();
      const Certificate c = certify_essential(d, resolve_state(d, analyze_state));
      if (with_surface && format == Format::json) {
        nlohmann::json j = to_json(c);
        j["ribbon_surface"] = to_json(build_state_surface(d, c.state));
        std::cout << j.dump(2) << "\n";
      } else {
        print_certificate(c, format, std::cout);
      }
      return 0;
    }
    if (*search) {
      const LinkDiagram d = search_args.load();
      const SearchResult r = find_certifying_states(d, search_opts);
      if (format == Format::json) {
        std::cout << to_json(r).dump(2) << "\n";
      } else if (format == Format::csv) {
        std::cout << "state,names,blocks\n";
        for (const auto& s : r.states) std::cout << s.state.to_string() << ',' << join(s.names, ";") << ',' << s.block_count << "\n";
      } else {
        std::cout << (r.exhaustive ? "exhaustive" : "canonical") << " search, " << r.scanned << " states scanned, "
                  << r.states.size() << " certify\n";
        for (const auto& s : r.states)
          std::cout << "  " << s.state.to_string() << "  blocks=" << s.block_count
                    << (s.names.empty() ? "" : "  [" + join(s.names, ", ") + "]") << "\n";
      }
      return 0;
    }
    if (*classify_cmd) {
      const LinkDiagram d = classify_args.load();
      const Classification k = classify(d);
      if (format == Format::json) {
        std::cout << to_json(k).dump(2) << "\n";
      } else if (format == Format::csv) {
        std::cout << "alternating,positive,negative,reduced,connected,homogeneous,semiadequate,adequate,certifiable,"
                     "certifying\n"
                  << k.diagram.alternating << ',' << k.diagram.positive << ',' << k.diagram.negative << ','
                  << k.diagram.reduced << ',' << k.diagram.connected << ',' << k.homogeneous << ','
                  << k.semiadequate << ',' << k.adequate << ',' << k.certifiable << ','
                  << join(k.certifying, ";") << "\n";
      } else {
        std::cout << "alternating  " << yes_no(k.diagram.alternating) << "\npositive     "
                  << yes_no(k.diagram.positive) << "\nnegative     " << yes_no(k.diagram.negative)
                  << "\nreduced      " << yes_no(k.diagram.reduced) << "\nconnected    "
                  << yes_no(k.diagram.connected) << "\nhomogeneous  " << yes_no(k.homogeneous)
                  << "\nsemiadequate " << yes_no(k.semiadequate) << "\nadequate     " << yes_no(k.adequate)
                  << "\ncertifying   " << (k.certifying.empty() ? "(none)" : join(k.certifying, ", ")) << "\n";
      }
      return 0;
    }
    if (*decide) {
      const LinkDiagram d = decide_args.load();
      std::vector<std::pair<std::string, Decision>> results;
      if (decide_kind != "split") results.emplace_back("trivial", decide_trivial(d, decide_opts));
      if (decide_kind != "trivial") results.emplace_back("split", decide_split(d, decide_opts));
      bool all_decided = true;
      for (const auto& [kind, dec] : results) all_decided = all_decided && dec.decided();
      if (format == Format::json) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [kind, dec] : results) j[kind] = to_json(dec);
        std::cout << j.dump(2) << "\n";
      } else if (format == Format::csv) {
        std::cout << "kind,decision,state,search_tier,message\n";
        for (const auto& [kind, dec] : results)
          std::cout << kind << ',' << outcome_name(dec.outcome) << ','
                    << (dec.certificate ? dec.certificate->state.to_string() : "") << ','
                    << (dec.certificate ? dec.certificate->search_tier : "") << ",\"" << dec.message << "\"\n";
      } else {
        for (const auto& [kind, dec] : results) {
          std::cout << kind << ": " << outcome_name(dec.outcome);
          if (dec.certificate)
            std::cout << " via state " << dec.certificate->state.to_string() << " (" << dec.certificate->search_tier
                      << " search)";
          if (!dec.message.empty()) std::cout << " - " << dec.message;
          std::cout << "\n";
        }
      }
      for (const auto& [kind, dec] : results)
        if (!dec.decided()) std::cerr << "statesurf: " << kind << ": " << dec.message << "\n";
      return all_decided ? 0 : 2;
    }
    if (*batch) {
      const Table t = load_table(batch_table);
      print_batch(run_batch(t, worker_count(threads)), format, std::cout);
      return 0;
    }
    if (*remark) {
      const RemarkTable which = *remark_table_from_name(which_name);
      const std::filesystem::path path = remark_table_path.empty()
                                             ? std::filesystem::path(data_dir) / remark_table_file(which)
                                             : std::filesystem::path(remark_table_path);
      const Table t = load_table(path);
      print_batch(run_remark_check(t, which, worker_count(threads)), format, std::cout);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "statesurf: parse error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << "statesurf: " << e.what() << "\n";
    return 1;
  } catch (const SearchLimitError& e) {
    std::cerr << "statesurf: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "statesurf: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "statesurf: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
