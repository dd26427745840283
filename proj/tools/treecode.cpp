// treecode: count, encode, decode, enumerate, sample and check the tree
// families handled by the library.
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treecode/edgetree.hpp"
#include "treecode/foata.hpp"
#include "treecode/hbuilt.hpp"
#include "treecode/oracle.hpp"
#include "treecode/text_io.hpp"

using namespace treecode;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kParse = 3, kBudget = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string selector;
  int k = 0, m = -1, e = 0, n = 0;
  int a_size = -1, b_size = -1, c_size = -1;
  std::optional<std::uint64_t> seed;
  std::string pattern;
  bool vertex_labelled = false;
  bool cameron = false;
  bool codes = false;
  bool from_code = false;
  std::string input = "-";
  std::string output = "-";
};

// Runs `fn` and reports anything it throws as a problem with the input file.
template <class F>
auto reading(F&& fn) {
  try {
    return fn();
  } catch (const io::ParseError&) {
    throw;
  } catch (const oracle::BudgetExceeded&) {
    throw;
  } catch (const std::exception& ex) {
    throw InputError(ex.what());
  }
}

class Io {
 public:
  explicit Io(const Options& o) {
    if (o.input != "-") {
      file_in_ = std::make_unique<std::ifstream>(o.input);
      if (!*file_in_) throw UsageError("cannot open " + o.input);
    }
    if (o.output != "-") {
      file_out_ = std::make_unique<std::ofstream>(o.output);
      if (!*file_out_) throw UsageError("cannot write " + o.output);
    }
  }
  std::istream& in() { return file_in_ ? *file_in_ : std::cin; }
  std::ostream& out() { return file_out_ ? *file_out_ : std::cout; }

 private:
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

int need_k(const Options& o) {
  need(o.k >= 1, "-k must be at least 1");
  return o.k;
}
int need_m(const Options& o) {
  need(o.m >= 0 && o.m < need_k(o), "-m must satisfy 0 <= m < k");
  return o.m;
}
int need_e(const Options& o) {
  need(o.e >= 1, "-e must be at least 1");
  return o.e;
}
int need_n(const Options& o) {
  need(o.n >= 1, "-n must be at least 1");
  return o.n;
}
int need_kgon_k(const Options& o) {
  need(o.k >= 3, "-k must be at least 3 for polygons");
  return o.k;
}

std::vector<Subset> parse_laps(const std::string& text) {
  std::vector<Subset> laps;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) {
    std::istringstream ps(part);
    std::vector<Vertex> v;
    Vertex x;
    while (ps >> x) v.push_back(x);
    need(ps.eof(), "bad vertex in --pattern");
    laps.emplace_back(v);
  }
  return laps;
}

PatternGraph pattern_of(const Options& o) {
  try {
    if (o.selector == "km") return PatternGraph::complete(need_k(o), need_m(o));
    if (o.selector == "kgon") return PatternGraph::cycle(need_kgon_k(o));
    need(!o.pattern.empty(), "hbuilt needs --pattern");
    if (o.pattern == "complete") return PatternGraph::complete(need_k(o), need_m(o));
    if (o.pattern == "cycle") return PatternGraph::cycle(need_kgon_k(o));
    return PatternGraph(need_k(o), need_m(o), parse_laps(o.pattern));
  } catch (const std::domain_error& ex) {
    throw UsageError(ex.what());
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

io::NamedFrame foata_frame(const Options& o) {
  need(o.a_size >= 0 && o.b_size >= 0 && o.c_size >= 0, "foata needs --a, --b and --c");
  need(o.b_size == 0 || o.b_size >= o.a_size, "gamma must be onto: need --b >= --a or --b 0");
  return io::NamedFrame::standard(o.a_size, o.b_size, o.c_size);
}

// The K_k^m decoration of a (k,m)-tree: every m-subset of every edge.
HBuiltTree complete_decoration(const Hypergraph& g, int m) {
  std::vector<DecoratedEdge> edges;
  for (const auto& edge : g.edges()) {
    DecoratedEdge d{edge, {}};
    const auto& v = edge.vec();
    for (std::uint64_t r = 1; r <= binomial_u64(v.size(), m); ++r) d.laps.push_back(colex_unrank(r, m, edge));
    edges.push_back(std::move(d));
  }
  return HBuiltTree(g.n(), g.k(), m, std::move(edges), Subset::interval(1, m));
}

std::optional<Subset> kgon_root() { return Subset{1, 2}; }

// Everything below works on one of three shapes of structure: a cycle-free
// function over a named frame, an H-built-tree (km, hbuilt, kgon), or an
// edge-labelled tree.

HBuiltTree read_hshape(const Options& o, std::istream& in) {
  return reading([&] {
    if (o.selector == "hbuilt") return io::read_hbuilt(in);
    auto file = io::read_hypergraph(in);
    if (o.selector == "km") {
      need_k(o);
      if (file.graph.k() != o.k || file.m != need_m(o)) throw std::domain_error("file parameters differ from -k/-m");
      auto check = validate_km_tree(file.graph, file.m, Subset::interval(1, file.m));
      if (!check) throw std::domain_error("not a (k,m)-tree rooted at [m]: " + check.reason);
      return complete_decoration(file.graph, file.m);
    }
    auto check = kgon_to_cbuilt(file.graph, need_kgon_k(o), kgon_root());
    if (!check.tree) throw std::domain_error("not a polygon tree containing {1,2}: " + check.reason);
    return *check.tree;
  });
}

void write_hshape(const Options& o, std::ostream& out, const HBuiltTree& t) {
  if (o.selector == "hbuilt")
    io::write_hbuilt(out, t);
  else if (o.selector == "km")
    io::write_hypergraph(out, t.hypergraph(), t.m());
  else
    io::write_hypergraph(out, cbuilt_to_kgon(t), 1);
}

void check_budget(const ExactCount& count, const std::string& what) {
  if (count.convert_to<double>() > oracle::kDeskBudget) throw oracle::BudgetExceeded(what, count.convert_to<double>());
}

// Calls fn on every Foata code over `spec`, in lexicographic order of the
// ordinals of its symbols.
void for_each_foata_code(const CycleFreeSpec& spec, const std::function<void(const FoataCode&)>& fn) {
  const int a = spec.a_size;
  if (a == 0) {
    fn(FoataCode{});
    return;
  }
  const int cod = spec.codomain_size();
  if (spec.c_size == 0) return;
  std::vector<int> digit(a, 0);
  digit[0] = spec.b_size();
  for (;;) {
    FoataCode code;
    for (int d : digit) code.delta.push_back(spec.target_at(d));
    fn(code);
    int i = a - 1;
    while (i >= 0) {
      if (++digit[i] < cod) break;
      digit[i] = i == 0 ? cod : 0;
      --i;
    }
    if (i < 0 || digit[0] >= cod) return;
  }
}

void for_each_hbuilt_code(const PatternGraph& h, int e, const std::function<void(const HBuiltCode&)>& fn) {
  const auto spec = hbuilt_frame(e, h.l());
  const auto copies = rooted_copies(h).members.size();
  for_each_foata_code(spec, [&](const FoataCode& c) {
    HBuiltCode code{foata_decode(spec, c), std::vector<std::uint64_t>(e, 1), std::vector<std::size_t>(e, 1)};
    for (;;) {
      fn(code);
      int i = e - 1;
      for (; i >= 0; --i) {
        if (code.r[i] < copies) {
          ++code.r[i];
          break;
        }
        code.r[i] = 1;
        if (code.x[i] < x_range(h.k(), h.m(), e, i + 1)) {
          ++code.x[i];
          break;
        }
        code.x[i] = 1;
      }
      if (i < 0) return;
    }
  });
}

ExactCount count_for(const Options& o) {
  if (o.selector == "foata") return count_cycle_free(foata_frame(o).spec);
  if (o.selector == "edgetree") return o.cameron ? cameron_Sn(need_n(o)) : count_edge_labelled(need_n(o));
  if (o.selector == "km")
    return o.vertex_labelled ? count_km_vertex_labelled(need_k(o), need_m(o), need_e(o))
                             : count_km_rooted(need_k(o), need_m(o), need_e(o));
  if (o.selector == "kgon")
    return o.vertex_labelled ? count_kgon_vertex_labelled(need_kgon_k(o), need_e(o))
                             : count_kgon_rooted(need_kgon_k(o), need_e(o));
  return count_hbuilt(pattern_of(o), need_e(o));
}

int run_count(const Options& o, Io& io) {
  if (o.vertex_labelled) need(o.selector == "km" || o.selector == "kgon", "--vertex-labelled applies to km and kgon");
  if (o.cameron) need(o.selector == "edgetree", "--cameron applies to edgetree");
  io.out() << to_string(count_for(o)) << '\n';
  return kOk;
}

int run_encode(const Options& o, Io& io) {
  if (o.selector == "foata") {
    auto file = io::read_foata(io.in());
    if (file.kind != "f") throw InputError("expected an `f=` line");
    auto code = reading([&] { return foata_encode(file.frame.spec, CycleFreeFunction{file.values}); });
    io::write_frame(io.out(), file.frame);
    io::write_foata_values(io.out(), file.frame, "delta", code.delta);
  } else if (o.selector == "edgetree") {
    auto tree = io::read_edge_tree(io.in());
    io::write_edge_code(io.out(), edge_encode(tree));
  } else {
    const auto h = pattern_of(o);
    auto tree = read_hshape(o, io.in());
    auto code = reading([&] { return hbuilt_encode(h, tree); });
    io::write_hbuilt_code(io.out(), code, h.l());
  }
  return kOk;
}

int run_decode(const Options& o, Io& io) {
  if (o.selector == "foata") {
    auto file = io::read_foata(io.in());
    if (file.kind != "delta") throw InputError("expected a `delta=` line");
    auto f = reading([&] { return foata_decode(file.frame.spec, FoataCode{file.values}); });
    io::write_frame(io.out(), file.frame);
    io::write_foata_values(io.out(), file.frame, "f", f.values);
  } else if (o.selector == "edgetree") {
    auto code = io::read_edge_code(io.in());
    io::write_edge_tree(io.out(), reading([&] { return edge_decode(code); }));
  } else {
    const auto h = pattern_of(o);
    auto code = io::read_hbuilt_code(io.in(), h.l());
    auto tree = reading([&] { return hbuilt_decode(h, static_cast<int>(code.x.size()), code); });
    write_hshape(o, io.out(), tree);
  }
  return kOk;
}

int run_enumerate(const Options& o, Io& io) {
  auto& out = io.out();
  bool first = true;
  auto separate = [&] {
    if (!first) out << '\n';
    first = false;
  };
  if (o.selector == "foata") {
    auto frame = foata_frame(o);
    if (o.codes) {
      check_budget(count_cycle_free(frame.spec), "Foata codes");
      io::write_frame(out, frame);
      for_each_foata_code(frame.spec,
                          [&](const FoataCode& c) { io::write_foata_values(out, frame, "delta", c.delta); });
    } else {
      io::write_frame(out, frame);
      for (const auto& f : oracle::enumerate_cycle_free(frame.spec)) io::write_foata_values(out, frame, "f", f.values);
    }
  } else if (o.selector == "edgetree") {
    const int n = need_n(o);
    if (o.codes) {
      check_budget(count_edge_labelled(n), "edge codes");
      for_each_foata_code(edge_frame(n), [&](const FoataCode& c) {
        if (c.delta.front().index != kEndA) return;
        EdgeCode code;
        for (const auto& t : c.delta) code.delta.push_back(t.is_c() ? t.index : t.index + 2);
        io::write_edge_code(out, code);
      });
    } else {
      for (const auto& t : oracle::enumerate_edge_labelled_trees(n)) {
        separate();
        io::write_edge_tree(out, t);
      }
    }
  } else {
    const auto h = pattern_of(o);
    const int e = need_e(o);
    if (o.codes) {
      check_budget(count_hbuilt(h, e), "H-built codes");
      for_each_hbuilt_code(h, e, [&](const HBuiltCode& c) {
        separate();
        io::write_hbuilt_code(out, c, h.l());
      });
    } else if (o.selector == "kgon") {
      for (const auto& g : oracle::enumerate_kgon_trees(h.k(), e)) {
        if (!o.vertex_labelled && !std::binary_search(g.edges().begin(), g.edges().end(), Subset{1, 2}, ColexLess{}))
          continue;
        separate();
        io::write_hypergraph(out, g, 1);
      }
    } else {
      for (const auto& t : oracle::enumerate_hbuilt(h, e)) {
        separate();
        write_hshape(o, out, t);
      }
    }
  }
  return kOk;
}

int run_random(const Options& o, Io& io) {
  need(o.seed.has_value(), "random needs --seed");
  SeededRng rng(*o.seed);
  if (o.selector == "foata") {
    auto frame = foata_frame(o);
    auto f = random_cycle_free(frame.spec, rng);
    io::write_frame(io.out(), frame);
    io::write_foata_values(io.out(), frame, "f", f.values);
  } else if (o.selector == "edgetree") {
    io::write_edge_tree(io.out(), edge_decode(random_edge_code(need_n(o), rng)));
  } else {
    const auto h = pattern_of(o);
    write_hshape(o, io.out(), random_hbuilt(h, need_e(o), rng));
  }
  return kOk;
}

struct Report {
  ExactCount oracle, formula;
  bool roundtrip = true;
};

template <class Structure, class Encode, class Decode>
bool roundtrips(const std::vector<Structure>& all, Encode encode, Decode decode) {
  std::set<decltype(encode(all.front()))> codes;
  for (const auto& s : all) {
    auto c = encode(s);
    if (!(decode(c) == s) || !codes.insert(c).second) return false;
  }
  return true;
}

Report verify(const Options& o) {
  Report r;
  if (o.selector == "foata") {
    const auto spec = foata_frame(o).spec;
    auto all = oracle::enumerate_cycle_free(spec);
    r.oracle = all.size();
    r.formula = count_cycle_free(spec);
    r.roundtrip = all.empty() || roundtrips(all, [&](const auto& f) { return foata_encode(spec, f); },
                                            [&](const auto& c) { return foata_decode(spec, c); });
  } else if (o.selector == "edgetree") {
    const int n = need_n(o);
    auto all = oracle::enumerate_edge_labelled_trees(n);
    if (o.cameron) {
      r.oracle = oracle::orbit_count_Sn(n);
      r.formula = cameron_Sn(n);
      for (const auto& t : all) r.roundtrip = r.roundtrip && cong_from_code(edge_encode(t)) == cong_from_tree(t);
    } else {
      r.oracle = all.size();
      r.formula = count_edge_labelled(n);
      r.roundtrip = roundtrips(all, edge_encode, edge_decode);
    }
  } else if (o.selector == "kgon") {
    const int k = need_kgon_k(o), e = need_e(o);
    const auto h = PatternGraph::cycle(k);
    auto graphs = oracle::enumerate_kgon_trees(k, e);
    std::vector<Hypergraph> rooted;
    for (const auto& g : graphs)
      if (std::binary_search(g.edges().begin(), g.edges().end(), Subset{1, 2}, ColexLess{})) rooted.push_back(g);
    r.oracle = o.vertex_labelled ? graphs.size() : rooted.size();
    r.formula = o.vertex_labelled ? count_kgon_vertex_labelled(k, e) : count_kgon_rooted(k, e);
    r.roundtrip = rooted.empty() ||
                  roundtrips(
                      rooted,
                      [&](const Hypergraph& g) {
                        auto t = kgon_to_cbuilt(g, k, kgon_root());
                        if (!t.tree) throw std::logic_error("oracle polygon tree rejected: " + t.reason);
                        return hbuilt_encode(h, *t.tree);
                      },
                      [&](const HBuiltCode& c) { return cbuilt_to_kgon(hbuilt_decode(h, e, c)); });
  } else {
    const auto h = pattern_of(o);
    const int e = need_e(o);
    auto all = oracle::enumerate_hbuilt(h, e);
    r.formula = count_hbuilt(h, e);
    r.oracle = all.size();
    if (o.selector == "km" && o.vertex_labelled) {
      r.oracle = oracle::enumerate_km_trees(h.k(), h.m(), e).size();
      r.formula = count_km_vertex_labelled(h.k(), h.m(), e);
    } else if (o.selector == "km") {
      r.formula = count_km_rooted(h.k(), h.m(), e);
    }
    r.roundtrip = all.empty() || roundtrips(all, [&](const HBuiltTree& t) { return hbuilt_encode(h, t); },
                                            [&](const HBuiltCode& c) { return hbuilt_decode(h, e, c); });
  }
  return r;
}

int run_verify(const Options& o, Io& io) {
  auto r = verify(o);
  io.out() << "oracle=" << to_string(r.oracle) << " formula=" << to_string(r.formula)
           << " roundtrip=" << (r.roundtrip ? "ok" : "FAILED") << '\n';
  return r.oracle == r.formula && r.roundtrip ? kOk : kMismatch;
}

int run_classes(const Options& o, Io& io) {
  need(o.selector == "edgetree", "classes applies to edgetree only");
  EdgePartition p;
  if (o.from_code) {
    auto code = io::read_edge_code(io.in());
    p = reading([&] { return cong_from_code(code); });
  } else {
    p = cong_from_tree(io::read_edge_tree(io.in()));
  }
  io::write_partition(io.out(), p);
  return kOk;
}

int dispatch(const Options& o) {
  Io io(o);
  if (o.command == "count") return run_count(o, io);
  if (o.command == "encode") return run_encode(o, io);
  if (o.command == "decode") return run_decode(o, io);
  if (o.command == "enumerate") return run_enumerate(o, io);
  if (o.command == "random") return run_random(o, io);
  if (o.command == "verify") return run_verify(o, io);
  return run_classes(o, io);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count, code, enumerate and sample trees built from hypergraphs"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> selectors{"foata", "km", "hbuilt", "kgon", "edgetree"};
  struct Help {
    const char* name;
    const char* text;
  };
  for (auto [name, text] : {Help{"count", "print the number of structures"},
                            Help{"encode", "read a structure, write its code"},
                            Help{"decode", "read a code, write its structure"},
                            Help{"enumerate", "list every structure (or every code with --codes)"},
                            Help{"random", "write one uniformly random structure"},
                            Help{"verify", "compare the formula with brute force and check round trips"},
                            Help{"classes", "write the classes of edges joined through degree-2 vertices"}}) {
    auto* sub = app.add_subcommand(name, text);
    sub->add_option("selector", o.selector, "structure family")
        ->required()
        ->check(CLI::IsMember(selectors));
    sub->add_option("-k", o.k, "edge size");
    sub->add_option("-m", o.m, "lap size");
    sub->add_option("-e", o.e, "number of edges");
    sub->add_option("-n", o.n, "number of labelled edges (edgetree)");
    sub->add_option("--a", o.a_size, "|A| (foata)");
    sub->add_option("--b", o.b_size, "|B| (foata)");
    sub->add_option("--c", o.c_size, "|C| (foata)");
    sub->add_option("--pattern", o.pattern, "hbuilt pattern: complete, cycle, or laps like \"1 2|2 3|1 3\"");
    sub->add_option("-i,--input", o.input, "input file, - for stdin");
    sub->add_option("-o,--output", o.output, "output file, - for stdout");
    const std::string cmd = name;
    if (cmd == "random") sub->add_option("--seed", o.seed, "random seed")->required();
    if (cmd == "count" || cmd == "verify" || cmd == "enumerate")
      sub->add_flag("--vertex-labelled", o.vertex_labelled, "count unrooted vertex-labelled trees");
    if (cmd == "count" || cmd == "verify") sub->add_flag("--cameron", o.cameron, "count up to degree-2 symmetry");
    if (cmd == "enumerate") sub->add_flag("--codes", o.codes, "list codes instead of structures");
    if (cmd == "classes") sub->add_flag("--code", o.from_code, "input is an edge code");
    sub->callback([&o, cmd] { o.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    return dispatch(o);
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << '\n';
    return kUsage;
  } catch (const io::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << '\n';
    return kParse;
  } catch (const InputError& ex) {
    std::cerr << "invalid input: " << ex.what() << '\n';
    return kParse;
  } catch (const oracle::BudgetExceeded& ex) {
    std::cerr << "refused: " << ex.what() << '\n';
    return kBudget;
  } catch (const std::domain_error& ex) {
    std::cerr << "usage error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "usage error: " << ex.what() << '\n';
    return kUsage;
  }
}
