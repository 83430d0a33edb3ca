// Acceptance runner: one PASS/FAIL line per criterion.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <sys/wait.h>

#include "corpus.hpp"
#include "oracle.hpp"
#include "statesurf/certify.hpp"
#include "statesurf/surface.hpp"
#include "statesurf/table.hpp"

using namespace statesurf;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Failures {
  int count = 0;
  std::ostringstream first;
  void add(const std::string& what) {
    if (count++ < 5) first << (count > 1 ? "; " : "") << what;
  }
  Verdict result(const std::string& ok) const {
    if (count == 0) return {true, ok};
    return {false, std::to_string(count) + " failures: " + first.str()};
  }
};

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "}";
}

// 1
Verdict figure_eight() {
  const auto d = parse_pd("X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)");
  const auto s = seifert_state(d);
  const auto g = build_state_graph(d, s);
  const auto dec = blocks(g);
  const auto f = invariants(build_state_surface(d, s));
  Failures fail;
  if (!is_adequate(g)) fail.add("not adequate");
  if (!is_homogeneous(g, dec)) fail.add("not homogeneous");
  if (g.vertex_count != 3 || g.edges.size() != 4) fail.add("graph size");
  if (dec.blocks.size() != 2) fail.add("block count " + std::to_string(dec.blocks.size()));
  for (const auto& b : dec.blocks)
    if (b.edges.size() != 2 || !b.sign) fail.add("block shape");
  if (f.euler_characteristic != -1 || !f.orientable || f.genus_or_crosscap != 1) fail.add("surface");
  const auto factors = factor_surfaces(d, s, dec);
  if (factors.size() != 2) fail.add("factor count");
  for (const auto& piece : factors) {
    const auto inv = invariants(piece);
    if (inv.euler_characteristic != 0 || !inv.orientable || inv.boundary_components != 2) fail.add("factor not an annulus");
  }
  return fail.result("state " + s.to_string() + ", 3 vertices, 4 edges, 2 blocks, chi -1, genus 1, two annuli");
}

// 2
Verdict alternating_suite() {
  const auto table = load_table(std::filesystem::path(STATESURF_DATA_DIR) / "rolfsen_upto10.tbl");
  Failures fail;
  int checked = 0;
  for (const auto& e : table.entries) {
    const auto& d = e.diagram;
    const auto cls = diagram_class(d);
    if (!cls.alternating || !cls.reduced) continue;
    ++checked;
    const auto plus = positive_state(d);
    const auto minus = negative_state(d);
    if (!certifies(d, plus)) fail.add(e.name + " plus");
    if (!certifies(d, minus)) fail.add(e.name + " minus");
    const int m = smooth(d, plus).loop_count + smooth(d, minus).loop_count;
    if (m != d.crossing_count() + 2) fail.add(e.name + " loop sum");
  }
  if (checked == 0) fail.add("no alternating diagrams");
  return fail.result(std::to_string(checked) + " reduced alternating diagrams");
}

// 3
Verdict remark_reproduction() {
  const std::filesystem::path dir = STATESURF_DATA_DIR;
  const std::vector<std::string> want10 = {"8_19", "10_124", "10_128", "10_134", "10_139", "10_142"};
  const std::vector<std::string> want11 = {"K11n93",  "K11n95",  "K11n118", "K11n126", "K11n136",
                                           "K11n169", "K11n171", "K11n180", "K11n181"};
  const auto r10 = run_remark_check(load_table(dir / "rolfsen_upto10.tbl"), RemarkTable::rolfsen10, threads());
  const auto r11 = run_remark_check(load_table(dir / "ht11.tbl"), RemarkTable::ht11, threads());
  Failures fail;
  if (r10.exceptions != want10) fail.add("rolfsen10 gave " + join(r10.exceptions));
  if (r11.exceptions != want11) fail.add("ht11 gave " + join(r11.exceptions));
  return fail.result("rolfsen10 " + join(r10.exceptions) + ", ht11 " + join(r11.exceptions) + ", " +
                     std::to_string(r10.overrides.size()) + " override");
}

// 4
Verdict positive_coincidence() {
  const auto diagrams = corpus::positive_braids(10, 2000, 4);
  Failures fail;
  for (const auto& d : diagrams) {
    if (!is_positive(d)) fail.add(d.to_pd() + " not positive");
    if (seifert_state(d) != positive_state(d)) fail.add(d.to_pd() + " seifert != plus");
    if (!classify(d).homogeneous) fail.add(d.to_pd() + " not homogeneous");
  }
  return fail.result(std::to_string(diagrams.size()) + " positive braid closures");
}

// 5
Verdict property_suite() {
  const auto pool = corpus::bundled();
  std::vector<corpus::Pair> pairs;
  for (const auto& e : pool)
    for (auto which : kCanonicalStates)
      pairs.push_back({e.name + "/" + std::string(canonical_name(which)), e.diagram, canonical_state(e.diagram, which)});
  const std::size_t canonical_pairs = pairs.size();
  for (auto& p : corpus::random_pairs(pool, 1500, 0x5eed)) pairs.push_back(std::move(p));

  Failures fail;
  for (const auto& [label, d, s] : pairs) {
    const auto loops = smooth(d, s);
    const auto f = build_state_surface(d, s);
    const auto inv = invariants(f);
    if (inv.euler_characteristic != loops.loop_count - d.crossing_count()) fail.add(label + " chi != m - n");
    if (inv.boundary_components != d.link_component_count()) fail.add(label + " boundary");

    const auto cover = double_cover(f);
    if (cover.invariants.euler_characteristic != 2 * inv.euler_characteristic) fail.add(label + " cover chi");
    if (!cover.invariants.orientable) fail.add(label + " cover nonorientable");
    int expected_pieces = 0;
    for (const auto& piece : component_invariants(f)) expected_pieces += piece.orientable ? 2 : 1;
    if (cover.invariants.components != expected_pieces) fail.add(label + " cover components");
    if (inv.connected && cover.invariants.connected != !inv.orientable) fail.add(label + " cover connectivity");

    const auto g = build_state_graph(d, s);
    const auto dec = blocks(g);
    const auto m = mirror(d);
    const auto gm = build_state_graph(m, -s);
    if (is_adequate(g) != is_adequate(gm)) fail.add(label + " mirror adequacy");
    if (is_homogeneous(g, dec) != is_homogeneous(gm, blocks(gm))) fail.add(label + " mirror homogeneity");

    int factor_sum = 0;
    for (const auto& piece : factor_surfaces(f, dec)) factor_sum += invariants(piece).euler_characteristic;
    int shared = 0;
    for (int k : dec.multiplicity) shared += k - 1;
    if (factor_sum - shared != inv.euler_characteristic) fail.add(label + " block chi additivity");
  }

  for (const auto& e : pool) {
    const auto& d = e.diagram;
    if (!invariants(build_state_surface(d, seifert_state(d))).orientable) fail.add(e.name + " seifert surface");
    if (d.diagram_component_count() != 1) continue;
    const int twice = 2 + d.crossing_count() - smooth(d, positive_state(d)).loop_count -
                      smooth(d, negative_state(d)).loop_count;
    if (twice < 0 || twice % 2 != 0) fail.add(e.name + " turaev genus " + std::to_string(twice) + "/2");
  }
  return fail.result(std::to_string(canonical_pairs) + " canonical + " +
                     std::to_string(pairs.size() - canonical_pairs) + " random pairs");
}

// 6
Verdict oracle_equivalence() {
  Failures fail;
  std::vector<oracle::OracleReport> reports;
  auto compare = [&](const std::string& what, auto fast, auto brute) {
    if (fast == brute) return;
    std::ostringstream a, b;
    a << fast;
    b << brute;
    reports.push_back({what, a.str(), b.str(), false});
    fail.add(what + " fast " + a.str() + " oracle " + b.str());
  };
  int diagrams = 0;
  long states = 0;
  for (const auto& e : corpus::bundled()) {
    const auto& d = e.diagram;
    if (d.crossing_count() > 8) continue;
    ++diagrams;
    const std::string tag = e.source + ":" + e.name;
    SearchOptions opt;
    opt.exhaustive = true;
    std::vector<std::string> fast;
    for (const auto& c : find_certifying_states(d, opt).states) fast.push_back(c.state.to_string());
    const auto brute = oracle::brute_adequate_homogeneous(d);
    compare(tag + " certifying", join(fast), join(brute));
    for (const auto& s : enumerate_states(d)) {
      ++states;
      const std::string str = s.to_string();
      const std::string at = tag + "[" + str + "]";
      compare(at + " loops", smooth(d, s).loop_count, oracle::naive_loop_trace(d, str));
      const auto f = build_state_surface(d, s);
      const auto x = invariants(f);
      const auto y = oracle::brute_surface_classify(f);
      compare(at + " chi", x.euler_characteristic, y.euler_characteristic);
      compare(at + " orientable", x.orientable, y.orientable);
      compare(at + " boundary", x.boundary_components, y.boundary_components);
      compare(at + " genus", x.genus_or_crosscap, y.genus_or_crosscap);
      compare(at + " pieces", x.components, y.components);
    }
  }
  for (const auto& r : reports) std::cerr << "oracle: " << r.quantity << " fast=" << r.fast << " brute=" << r.brute << "\n";
  return fail.result(std::to_string(diagrams) + " diagrams, " + std::to_string(states) + " states");
}

// 7
Verdict decision_soundness() {
  Failures fail;
  if (decide_trivial(parse_pd("O")).outcome != statesurf::Outcome::trivial) fail.add("unknot circle");
  const auto kink = parse_pd("X(1,1,2,2)");
  if (decide_trivial(kink).outcome != statesurf::Outcome::refused) fail.add("kink not refused");
#ifdef STATESURF_CLI
  {
    const std::string cmd = std::string("\"") + STATESURF_CLI + "\" decide --pd \"X(1,1,2,2)\" --kind trivial > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    if (!WIFEXITED(rc) || WEXITSTATUS(rc) != 2) fail.add("kink exit status " + std::to_string(rc));
  }
#endif
  int certifying = 0, split_inputs = 0;
  const auto pool = corpus::bundled();
  for (const auto& e : pool) {
    const auto& d = e.diagram;
    if (!diagram_class(d).reduced) continue;
    bool any = classify(d).certifiable;
    if (!any) {
      SearchOptions opt;
      opt.exhaustive = true;
      any = !find_certifying_states(d, opt).states.empty();
    }
    const auto t = decide_trivial(d);
    if (any) {
      ++certifying;
      if (t.outcome != statesurf::Outcome::nontrivial) fail.add(e.name + " trivial: " + std::string(outcome_name(t.outcome)));
    } else if (t.outcome == statesurf::Outcome::trivial || t.outcome == statesurf::Outcome::nontrivial) {
      fail.add(e.name + " decided without a certificate");
    }
    const auto sp = decide_split(d);
    if (sp.outcome == statesurf::Outcome::split) fail.add(e.name + " connected input called split");
    if (any && sp.outcome != statesurf::Outcome::nonsplit) fail.add(e.name + " split: " + std::string(outcome_name(sp.outcome)));
  }
  std::vector<LinkDiagram> disconnected = {parse_pd("O;O"), parse_pd("O;O;O")};
  for (std::size_t i = 0; i + 1 < pool.size() && disconnected.size() < 200; i += 7)
    disconnected.push_back(disjoint_union(pool[i].diagram, pool[i + 1].diagram));
  for (std::size_t i = 0; i < pool.size() && disconnected.size() < 300; i += 11)
    disconnected.push_back(disjoint_union(pool[i].diagram, parse_pd("O")));
  for (const auto& d : disconnected) {
    ++split_inputs;
    if (decide_split(d).outcome != statesurf::Outcome::split) fail.add(d.to_pd() + " not split");
  }
  return fail.result(std::to_string(certifying) + " certifying diagrams nontrivial, " + std::to_string(split_inputs) +
                     " disconnected inputs split, kink refused");
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statesurf acceptance runner"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-7)")->check(CLI::Range(0, 7));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "figure-eight worked example", 1.0, figure_eight},
      {2, "alternating suite", 30.0, alternating_suite},
      {3, "remark-check exception lists", 300.0, remark_reproduction},
      {4, "positive-diagram coincidence", 0.0, positive_coincidence},
      {5, "property suite", 120.0, property_suite},
      {6, "oracle equivalence", 300.0, oracle_equivalence},
      {7, "decision soundness", 10.0, decision_soundness},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      r.pass = false;
      r.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  " << std::fixed
              << std::setprecision(2) << secs << " s  " << r.detail << std::endl;
  }
  return all ? 0 : 1;
}
