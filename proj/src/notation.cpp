#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "statesurf/diagram.hpp"

namespace statesurf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
         c == '{' || c == '}' || c == '!';
}

// Splits an optional `name:` prefix. "DT:" is never treated as a name.
std::pair<std::string, std::string_view> split_name(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return {{}, text};
  const std::string_view head = trim(text.substr(0, colon));
  if (head.empty() || head == "DT" || head == "dt") return {{}, text};
  if (!std::all_of(head.begin(), head.end(), is_name_char)) return {{}, text};
  return {std::string(head), trim(text.substr(colon + 1))};
}

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    int value = 0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    if (begin < end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseErrorKind::syntax, msg + " at column " + std::to_string(pos_ + 1));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  auto [name, body] = split_name(text);
  Scanner sc(body);
  std::vector<Crossing> xs;
  int circles = 0;
  bool any = false;
  while (!sc.done()) {
    const char c = sc.peek();
    if (c == ';' || c == ',') {
      sc.accept(c);
      continue;
    }
    if (c == 'X' || c == 'x') {
      sc.accept(c);
      const char close = sc.accept('(') ? ')' : (sc.expect('['), ']');
      Crossing x;
      for (int i = 0; i < 4; ++i) {
        if (i > 0) sc.expect(',');
        x.slots[i] = sc.integer();
      }
      sc.expect(close);
      xs.push_back(x);
      any = true;
    } else if (c == 'O' || c == 'o') {
      sc.accept(c);
      ++circles;
      any = true;
    } else {
      sc.fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (!any) throw ParseError(ParseErrorKind::syntax, "empty diagram");
  return LinkDiagram::from_crossings(std::move(xs), circles, std::move(name));
}

namespace {

using PlanarGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                          boost::property<boost::vertex_index_t, int>,
                                          boost::property<boost::edge_index_t, int>>;

// Decides, for each crossing, whether the even pass runs right-to-left across
// the odd pass. Each crossing becomes a wheel (hub plus a 4-cycle of ports in
// the order odd-in, even-in, odd-out, even-out); wheels are rigid up to
// reflection, so any planar embedding fixes one handedness per crossing.
std::optional<std::vector<bool>> realize_handedness(int n, const std::vector<int>& crossing_of_pass,
                                                    const std::vector<bool>& pass_is_odd) {
  const int hubs = n;
  const int ports = 4 * n;
  const int subdiv = 2 * n;
  PlanarGraph g(hubs + ports + subdiv);
  auto port = [&](int crossing, int which) { return hubs + 4 * crossing + which; };
  enum { odd_in = 0, even_in = 1, odd_out = 2, even_out = 3 };
  for (int i = 0; i < n; ++i) {
    for (int w = 0; w < 4; ++w) {
      boost::add_edge(i, port(i, w), g);
      boost::add_edge(port(i, w), port(i, (w + 1) % 4), g);
    }
  }
  const int len = 2 * n;
  for (int p = 1; p <= len; ++p) {
    const int q = p % len + 1;
    const int from = port(crossing_of_pass[p], pass_is_odd[p] ? odd_out : even_out);
    const int to = port(crossing_of_pass[q], pass_is_odd[q] ? odd_in : even_in);
    const int mid = hubs + ports + (p - 1);
    boost::add_edge(from, mid, g);
    boost::add_edge(mid, to, g);
  }
  int e_index = 0;
  boost::graph_traits<PlanarGraph>::edge_iterator ei, ei_end;
  for (boost::tie(ei, ei_end) = boost::edges(g); ei != ei_end; ++ei)
    boost::put(boost::edge_index, g, *ei, e_index++);

  using Edge = boost::graph_traits<PlanarGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> embedding(boost::num_vertices(g));
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding = &embedding[0]);
  if (!planar) return std::nullopt;

  std::vector<bool> right_to_left(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> order;
    for (const auto& e : embedding[i]) {
      const int other = static_cast<int>(boost::source(e, g)) == i ? static_cast<int>(boost::target(e, g))
                                                                   : static_cast<int>(boost::source(e, g));
      order.push_back(other - port(i, 0));
    }
    const auto at = std::find(order.begin(), order.end(), 0) - order.begin();
    right_to_left[i] = order[(at + 1) % 4] == even_in;
  }
  // Fix chirality at the crossing holding pass 1.
  const int first = crossing_of_pass[1];
  if (!right_to_left[first]) right_to_left.flip();
  return right_to_left;
}

}  // namespace

LinkDiagram parse_dt(std::string_view text) {
  auto [name, body] = split_name(text);
  body = trim(body);
  if (body.size() >= 2 && (body.substr(0, 2) == "DT" || body.substr(0, 2) == "dt")) {
    body.remove_prefix(2);
    body = trim(body);
    if (!body.empty() && body.front() == ':') body.remove_prefix(1);
  }
  if (body.find('(') != std::string_view::npos || body.find('|') != std::string_view::npos)
    throw ParseError(ParseErrorKind::multi_component, "DT input describes more than one component");
  Scanner sc(body);
  sc.accept('[');
  std::vector<int> entries;
  while (!sc.done() && sc.peek() != ']') {
    if (sc.accept(',')) continue;
    entries.push_back(sc.integer());
  }
  sc.accept(']');
  if (!sc.done()) sc.fail("trailing input");
  if (entries.empty()) throw ParseError(ParseErrorKind::syntax, "empty DT sequence");

  const int n = static_cast<int>(entries.size());
  const int len = 2 * n;
  std::vector<int> crossing_of_pass(len + 1, -1);
  std::vector<bool> pass_is_odd(len + 1, false);
  for (int i = 0; i < n; ++i) {
    const int e = entries[i];
    if (e % 2 != 0)
      throw ParseError(ParseErrorKind::odd_entry, "DT entry " + std::to_string(e) + " is odd");
    const int a = std::abs(e);
    if (a < 2 || a > len)
      throw ParseError(ParseErrorKind::not_realizable, "DT entry " + std::to_string(e) + " out of range");
    if (crossing_of_pass[a] >= 0)
      throw ParseError(ParseErrorKind::not_realizable, "DT entry " + std::to_string(a) + " repeated");
    crossing_of_pass[2 * i + 1] = i;
    pass_is_odd[2 * i + 1] = true;
    crossing_of_pass[a] = i;
  }

  const auto handed = realize_handedness(n, crossing_of_pass, pass_is_odd);
  if (!handed) throw ParseError(ParseErrorKind::not_realizable, "DT sequence is not realizable on the sphere");

  // Arc p runs from pass p to pass p + 1; arc 2n closes the loop.
  auto arc_in = [&](int pass) { return pass == 1 ? len : pass - 1; };
  std::vector<Crossing> xs(n);
  for (int i = 0; i < n; ++i) {
    const int o = 2 * i + 1;
    const int e = std::abs(entries[i]);
    const bool odd_over = entries[i] > 0;
    std::array<int, 4> ccw = (*handed)[i] ? std::array<int, 4>{arc_in(o), arc_in(e), o, e}
                                          : std::array<int, 4>{arc_in(o), e, o, arc_in(e)};
    if (odd_over) {
      // Start at the incoming even arc.
      const auto at = std::find(ccw.begin(), ccw.end(), arc_in(e)) - ccw.begin();
      std::rotate(ccw.begin(), ccw.begin() + at, ccw.end());
    }
    xs[i].slots = ccw;
  }
  return LinkDiagram::from_crossings(std::move(xs), 0, std::move(name));
}

LinkDiagram parse_diagram(std::string_view text) {
  auto [name, body] = split_name(text);
  if (body.size() >= 2 && (body.substr(0, 2) == "DT" || body.substr(0, 2) == "dt")) {
    auto d = parse_dt(body);
    return name.empty() ? d : d.with_name(name);
  }
  auto d = parse_pd(body);
  return name.empty() ? d : d.with_name(name);
}

LinkDiagram from_braid(std::span<const int> word, std::string name) {
  int strands = 1;
  for (int g : word) {
    if (g == 0) throw ParseError(ParseErrorKind::syntax, "braid generator 0");
    strands = std::max(strands, std::abs(g) + 1);
  }
  int next = 0;
  std::vector<int> bottom(strands);
  for (auto& b : bottom) b = ++next;
  std::vector<int> cur = bottom;
  std::vector<Crossing> xs;
  for (int g : word) {
    const int i = std::abs(g) - 1;
    const int bl = cur[i], br = cur[i + 1];
    const int tl = ++next, tr = ++next;
    // Strands run upward; slots counterclockwise from the incoming understrand.
    if (g > 0)
      xs.push_back({{br, tr, tl, bl}});
    else
      xs.push_back({{bl, br, tr, tl}});
    cur[i] = tl;
    cur[i + 1] = tr;
  }
  std::map<int, int> close;
  int free_loops = 0;
  for (int k = 0; k < strands; ++k) {
    if (cur[k] == bottom[k])
      ++free_loops;
    else
      close[cur[k]] = bottom[k];
  }
  for (auto& x : xs)
    for (auto& l : x.slots)
      if (auto it = close.find(l); it != close.end()) l = it->second;
  return LinkDiagram::from_crossings(std::move(xs), free_loops, std::move(name));
}

}  // namespace statesurf
