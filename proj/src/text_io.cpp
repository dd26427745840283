#include "treecode/text_io.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "treecode/foata.hpp"

namespace treecode::io {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line that is neither blank nor a comment.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  std::string require(const char* what) {
    auto line = next();
    if (!line) throw ParseError(line_no_ + 1, std::string("unexpected end of input, expected ") + what);
    return *line;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, what); }
  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<long long> integers(LineReader& r, const std::string& line) {
  std::istringstream is(line);
  std::vector<long long> out;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      r.fail("expected an integer, got '" + tok + "'");
    }
  }
  return out;
}

Subset vertex_set(LineReader& r, const std::string& text) {
  std::vector<Vertex> vs;
  for (long long v : integers(r, text)) vs.push_back(static_cast<Vertex>(v));
  try {
    return Subset(std::move(vs));
  } catch (const std::domain_error& e) {
    r.fail(e.what());
  }
}

void write_vertices(std::ostream& out, const Subset& s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s.vec()[i];
}

HypergraphFile read_hypergraph_block(LineReader& r) {
  auto header = integers(r, r.require("header `n k m e`"));
  if (header.size() != 4) r.fail("header must be `n k m e`");
  const int n = static_cast<int>(header[0]), k = static_cast<int>(header[1]), m = static_cast<int>(header[2]);
  const long long e = header[3];
  if (n < 0 || k < 1 || m < 0 || m >= k || e < 0) r.fail("header values out of range");
  std::vector<Subset> edges;
  for (long long i = 0; i < e; ++i) {
    Subset edge = vertex_set(r, r.require("an edge line"));
    if (static_cast<int>(edge.size()) != k) r.fail("edge must have k vertices");
    if (edge.min() < 1 || edge.max() > n) r.fail("vertex outside [n]");
    edges.push_back(std::move(edge));
  }
  try {
    return {Hypergraph(n, k, std::move(edges)), m};
  } catch (const std::domain_error& err) {
    r.fail(err.what());
  }
}

}  // namespace

HypergraphFile read_hypergraph(std::istream& in) {
  LineReader r(in);
  return read_hypergraph_block(r);
}

void write_hypergraph(std::ostream& out, const Hypergraph& g, int m) {
  out << g.n() << ' ' << g.k() << ' ' << m << ' ' << g.edge_count() << '\n';
  for (const auto& edge : g.edges()) {
    write_vertices(out, edge);
    out << '\n';
  }
}

HBuiltTree read_hbuilt(std::istream& in) {
  LineReader r(in);
  auto block = read_hypergraph_block(r);
  const auto& edges = block.graph.edges();
  std::vector<DecoratedEdge> decorated;
  for (const auto& edge : edges) decorated.push_back({edge, {}});
  std::vector<bool> seen(edges.size(), false);
  for (std::size_t count = 0; count < edges.size(); ++count) {
    const std::string line = r.require("an `H i : ...` line");
    const auto colon = line.find(':');
    std::istringstream head(line.substr(0, colon));
    std::string tag;
    long long i = 0;
    if (colon == std::string::npos || !(head >> tag >> i) || tag != "H") r.fail("expected `H i : lap | lap ...`");
    if (i < 1 || i > static_cast<long long>(edges.size()) || seen[i - 1]) r.fail("bad or repeated edge index");
    seen[i - 1] = true;
    for (const auto& lap_text : split(line.substr(colon + 1), '|')) {
      Subset lap = vertex_set(r, lap_text);
      if (static_cast<int>(lap.size()) != block.m) r.fail("lap must have m vertices");
      decorated[i - 1].laps.push_back(std::move(lap));
    }
  }
  const std::string root_line = r.require("`root: ...`");
  if (trim(root_line).rfind("root:", 0) != 0) r.fail("expected `root: v1 ... vm`");
  Subset root = vertex_set(r, trim(root_line).substr(5));
  if (static_cast<int>(root.size()) != block.m) r.fail("root must have m vertices");
  return HBuiltTree(block.graph.n(), block.graph.k(), block.m, std::move(decorated), std::move(root));
}

void write_hbuilt(std::ostream& out, const HBuiltTree& t) {
  write_hypergraph(out, t.hypergraph(), t.m());
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    out << "H " << i + 1 << " :";
    const auto& laps = t.edges()[i].laps;
    for (std::size_t j = 0; j < laps.size(); ++j) {
      out << (j ? " | " : " ");
      write_vertices(out, laps[j]);
    }
    out << '\n';
  }
  out << "root:";
  for (Vertex v : t.root()) out << ' ' << v;
  out << '\n';
}

HBuiltCode read_hbuilt_code(std::istream& in, int l) {
  LineReader r(in);
  auto tokens_after = [&](const char* tag) {
    const std::string line = trim(r.require(tag));
    const std::string prefix = std::string(tag) + ":";
    if (line.rfind(prefix, 0) != 0) r.fail(std::string("expected `") + prefix + " ...`");
    std::istringstream is(line.substr(prefix.size()));
    std::vector<std::string> toks;
    for (std::string t; is >> t;) toks.push_back(t);
    return toks;
  };
  HBuiltCode code;
  for (const auto& tok : tokens_after("g")) {
    if (tok == "C") {
      code.g.values.push_back(Target::in_c(0));
      continue;
    }
    const auto dot = tok.find('.');
    try {
      if (dot == std::string::npos) throw std::invalid_argument(tok);
      const int i = std::stoi(tok.substr(0, dot)), j = std::stoi(tok.substr(dot + 1));
      if (i < 1 || j < 1 || j > l - 1) throw std::invalid_argument(tok);
      code.g.values.push_back(lap_label(i, j, l));
    } catch (const std::exception&) {
      r.fail("bad g token '" + tok + "' (expected C or i.j with 1 <= j <= l-1)");
    }
  }
  auto numbers = [&](const char* tag) {
    std::vector<std::uint64_t> out;
    for (const auto& tok : tokens_after(tag)) {
      try {
        std::size_t used = 0;
        auto v = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        out.push_back(v);
      } catch (const std::exception&) {
        r.fail(std::string("bad ") + tag + " value '" + tok + "'");
      }
    }
    return out;
  };
  code.x = numbers("x");
  for (auto v : numbers("R")) code.r.push_back(static_cast<std::size_t>(v));
  if (code.x.size() != code.g.values.size() || code.r.size() != code.g.values.size())
    r.fail("g, x and R must have the same length");
  for (const auto& t : code.g.values)
    if (!t.is_c() && t.index / (l - 1) >= static_cast<int>(code.g.values.size())) r.fail("g refers to a missing edge");
  return code;
}

void write_hbuilt_code(std::ostream& out, const HBuiltCode& code, int l) {
  out << "g:";
  for (const auto& t : code.g.values) {
    if (t.is_c())
      out << " C";
    else
      out << ' ' << t.index / (l - 1) + 1 << '.' << t.index % (l - 1) + 1;
  }
  out << "\nx:";
  for (auto x : code.x) out << ' ' << x;
  out << "\nR:";
  for (auto r : code.r) out << ' ' << r;
  out << '\n';
}

NamedFrame NamedFrame::standard(int a_size, int b_size, int c_size) {
  NamedFrame f;
  f.spec.a_size = a_size;
  f.spec.c_size = c_size;
  for (int i = 1; i <= a_size; ++i) f.a.push_back("a" + std::to_string(i));
  for (int j = 1; j <= b_size; ++j) {
    f.b.push_back("b" + std::to_string(j));
    f.spec.gamma.push_back(a_size ? (j - 1) % a_size : 0);
  }
  for (int i = 1; i <= c_size; ++i) f.c.push_back("c" + std::to_string(i));
  f.spec.validate();
  return f;
}

std::string NamedFrame::name(const Target& t) const { return t.is_c() ? c.at(t.index) : b.at(t.index); }

Target NamedFrame::parse(const std::string& token) const {
  if (auto it = std::find(b.begin(), b.end(), token); it != b.end())
    return Target::in_b(static_cast<int>(it - b.begin()));
  if (auto it = std::find(c.begin(), c.end(), token); it != c.end())
    return Target::in_c(static_cast<int>(it - c.begin()));
  throw std::invalid_argument("'" + token + "' is not an element of B or C");
}

FoataFile read_foata(std::istream& in) {
  LineReader r(in);
  FoataFile file;
  NamedFrame& frame = file.frame;
  std::map<std::string, std::string> fields;
  for (const auto& part : split(trim(r.require("the frame line")), ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) r.fail("frame fields must be `name=value`");
    fields[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
  }
  for (const char* key : {"A", "B", "C", "gamma"})
    if (!fields.count(key)) r.fail(std::string("frame is missing ") + key);
  auto names = [&](const std::string& list) {
    std::vector<std::string> out;
    for (const auto& n : split(list, ','))
      if (!trim(n).empty()) out.push_back(trim(n));
    return out;
  };
  frame.a = names(fields["A"]);
  frame.b = names(fields["B"]);
  frame.c = names(fields["C"]);
  {
    std::vector<std::string> all = frame.a;
    all.insert(all.end(), frame.b.begin(), frame.b.end());
    all.insert(all.end(), frame.c.begin(), frame.c.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) r.fail("A, B and C must be disjoint, without repeats");
  }
  frame.spec.a_size = static_cast<int>(frame.a.size());
  frame.spec.c_size = static_cast<int>(frame.c.size());
  frame.spec.gamma.assign(frame.b.size(), -1);
  for (const auto& pair : names(fields["gamma"])) {
    const auto arrow = pair.find("->");
    if (arrow == std::string::npos) r.fail("gamma entries must be `b->a`");
    const std::string from = trim(pair.substr(0, arrow)), to = trim(pair.substr(arrow + 2));
    auto bi = std::find(frame.b.begin(), frame.b.end(), from);
    auto ai = std::find(frame.a.begin(), frame.a.end(), to);
    if (bi == frame.b.end() || ai == frame.a.end()) r.fail("gamma entry '" + pair + "' names unknown elements");
    int& slot = frame.spec.gamma[bi - frame.b.begin()];
    if (slot >= 0) r.fail("gamma defined twice for " + from);
    slot = static_cast<int>(ai - frame.a.begin());
  }
  if (std::count(frame.spec.gamma.begin(), frame.spec.gamma.end(), -1)) r.fail("gamma must be defined on all of B");
  try {
    frame.spec.validate();
  } catch (const std::domain_error& e) {
    r.fail(e.what());
  }

  const std::string line = trim(r.require("`f=...` or `delta=...`"));
  const auto eq = line.find('=');
  if (eq == std::string::npos) r.fail("expected `f=...` or `delta=...`");
  file.kind = trim(line.substr(0, eq));
  if (file.kind != "f" && file.kind != "delta") r.fail("expected `f=...` or `delta=...`");
  std::istringstream is(line.substr(eq + 1));
  for (std::string tok; is >> tok;) {
    try {
      file.values.push_back(frame.parse(tok));
    } catch (const std::invalid_argument& e) {
      r.fail(e.what());
    }
  }
  if (static_cast<int>(file.values.size()) != frame.spec.a_size) r.fail("expected |A| values");
  return file;
}

void write_frame(std::ostream& out, const NamedFrame& frame) {
  auto list = [&](const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
    return s;
  };
  out << "A=" << list(frame.a) << ";B=" << list(frame.b) << ";C=" << list(frame.c) << ";gamma=";
  for (std::size_t j = 0; j < frame.b.size(); ++j)
    out << (j ? "," : "") << frame.b[j] << "->" << frame.a[frame.spec.gamma[j]];
  out << '\n';
}

void write_foata_values(std::ostream& out, const NamedFrame& frame, const std::string& kind,
                        const std::vector<Target>& values) {
  out << kind << '=';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << frame.name(values[i]);
  out << '\n';
}

EdgeLabelledTree read_edge_tree(std::istream& in) {
  LineReader r(in);
  auto header = integers(r, r.require("the edge count"));
  if (header.size() != 1 || header[0] < 1) r.fail("first line must be the edge count n >= 1");
  const int n = static_cast<int>(header[0]);
  std::vector<std::optional<std::pair<Vertex, Vertex>>> ends(n);
  for (int i = 0; i < n; ++i) {
    std::istringstream is(r.require("an edge line `label u v`"));
    std::string label_tok;
    long long u = 0, v = 0;
    if (!(is >> label_tok >> u >> v)) r.fail("expected `label u v`");
    std::string rest;
    if (is >> rest) r.fail("trailing text after `label u v`");
    if (!label_tok.empty() && label_tok[0] == 'e') label_tok.erase(0, 1);
    int label = 0;
    try {
      std::size_t used = 0;
      label = std::stoi(label_tok, &used);
      if (used != label_tok.size()) throw std::invalid_argument(label_tok);
    } catch (const std::exception&) {
      r.fail("bad edge label");
    }
    if (label < 1 || label > n || ends[label - 1]) r.fail("edge labels must be e1..en, each once");
    ends[label - 1] = std::pair<Vertex, Vertex>(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::vector<std::pair<Vertex, Vertex>> plain;
  for (const auto& e : ends) plain.push_back(*e);
  try {
    return EdgeLabelledTree(plain);
  } catch (const std::domain_error& e) {
    r.fail(e.what());
  }
}

void write_edge_tree(std::ostream& out, const EdgeLabelledTree& t) {
  std::vector<int> number(t.vertex_count(), 0);
  int next = 1;
  const Vertex a = a_endpoint(t);
  number[a] = next++;
  std::deque<Vertex> queue{a};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (int label : t.incident(x)) {
      Vertex y = t.other_end(label, x);
      if (!number[y]) {
        number[y] = next++;
        queue.push_back(y);
      }
    }
  }
  out << t.edge_count() << '\n';
  for (int label = 1; label <= t.edge_count(); ++label) {
    auto [u, v] = t.endpoints(label);
    out << 'e' << label << ' ' << std::min(number[u], number[v]) << ' ' << std::max(number[u], number[v]) << '\n';
  }
}

EdgeCode read_edge_code(std::istream& in) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).rfind('#', 0) == 0) continue;
    break;
  }
  EdgeCode code;
  std::istringstream is(line);
  for (std::string tok; is >> tok;) {
    try {
      code.delta.push_back(parse_symbol(tok));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  const int n = code.edge_count();
  for (int s : code.delta)
    if (s > n) throw ParseError(line_no, "symbol " + symbol_name(s) + " exceeds e" + std::to_string(n));
  return code;
}

void write_edge_code(std::ostream& out, const EdgeCode& code) {
  for (std::size_t i = 0; i < code.delta.size(); ++i) out << (i ? " " : "") << symbol_name(code.delta[i]);
  out << '\n';
}

void write_partition(std::ostream& out, const EdgePartition& p) {
  for (const auto& block : p.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << 'e' << block[i];
    out << '\n';
  }
}

}  // namespace treecode::io
