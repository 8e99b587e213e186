#pragma once

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mergeweaver/eval.hpp"

namespace mwtest {

using namespace mergeweaver;
namespace fs = std::filesystem;

inline fs::path corpus_dir() { return fs::path(MW_CORPUS_DIR); }
inline fs::path scenario_dir(const std::string& id) { return corpus_dir() / "scenarios" / id; }

inline ScenarioRun run_fixture(const std::string& id) {
  fs::path d = scenario_dir(id);
  return run_scenario(d / "base", d / "left", d / "right", id);
}

inline FourWayGraph fixture_graph(const std::string& id) {
  fs::path d = scenario_dir(id);
  return build_scenario_graph(merge_scenario(d / "base", d / "left", d / "right"));
}

inline SourceFile parse(const std::string& text) { return parse_unit("T.java", text); }

// ---- structural oracle

inline bool same_subtree(const SyntaxTree& a, NodeId x, const SyntaxTree& b, NodeId y) {
  if (a.kind(x) != b.kind(y) || a.value(x) != b.value(y)) return false;
  const auto& cx = a.children(x);
  const auto& cy = b.children(y);
  if (cx.size() != cy.size()) return false;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    if (!same_subtree(a, cx[i], b, cy[i])) return false;
  }
  return true;
}

inline bool same_tree(const SyntaxTree& a, const SyntaxTree& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  return same_subtree(a, a.root(), b, b.root());
}

inline std::size_t live_nodes(const SyntaxTree& t) { return t.empty() ? 0 : t.preorder(t.root()).size(); }

inline std::vector<NodeId> statements_of_kind(const SyntaxTree& t, NodeKind k) {
  std::vector<NodeId> out;
  for (NodeId n : t.preorder(t.root())) {
    if (t.kind(n) == k) out.push_back(n);
  }
  return out;
}

// ---- random trees for the differ

struct TreeGen {
  std::mt19937 rng;
  explicit TreeGen(unsigned seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  NodeKind kind() { return static_cast<NodeKind>(pick(0, 32)); }
  std::string value() {
    static const char* pool[] = {"", "", "a", "b", "c", "x", "run", "add", "Foo", "Bar", "1", "+", "=="};
    return pool[pick(0, 12)];
  }

  SyntaxTree tree(int max_nodes) {
    SyntaxTree t;
    NodeId root = t.create(NodeKind::CompilationUnit);
    t.set_root(root);
    std::vector<NodeId> nodes{root};
    int n = pick(1, max_nodes);
    for (int i = 0; i < n; ++i) {
      NodeId parent = nodes[pick(0, static_cast<int>(nodes.size()) - 1)];
      NodeId c = t.create(kind(), value());
      t.insert_child(parent, c, pick(0, static_cast<int>(t.children(parent).size())));
      nodes.push_back(c);
    }
    return t;
  }

  // One random update / insert / delete / move on a copy of the live tree.
  void mutate(SyntaxTree& t) {
    std::vector<NodeId> all = t.preorder(t.root());
    auto any = [&] { return all[pick(0, static_cast<int>(all.size()) - 1)]; };
    switch (pick(0, 3)) {
      case 0: {
        NodeId n = any();
        t.node(n).value = value() + "'";
        break;
      }
      case 1: {
        NodeId p = any();
        NodeId c = t.create(kind(), value());
        t.insert_child(p, c, pick(0, static_cast<int>(t.children(p).size())));
        break;
      }
      case 2: {
        if (all.size() < 2) return mutate(t);
        NodeId n = all[pick(1, static_cast<int>(all.size()) - 1)];
        t.erase_subtree(n);
        break;
      }
      default: {
        if (all.size() < 3) return mutate(t);
        NodeId n = all[pick(1, static_cast<int>(all.size()) - 1)];
        std::vector<NodeId> targets;
        for (NodeId p : all) {
          if (p != n && !t.is_ancestor(n, p)) targets.push_back(p);
        }
        NodeId p = targets[pick(0, static_cast<int>(targets.size()) - 1)];
        t.detach(n);
        t.insert_child(p, n, pick(0, static_cast<int>(t.children(p).size())));
        break;
      }
    }
  }
};

// ---- grammar-driven J0 units

struct UnitGen {
  std::mt19937 rng;
  int depth = 0;
  explicit UnitGen(unsigned seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  template <class T>
  const T& one(const std::vector<T>& v) { return v[pick(0, static_cast<int>(v.size()) - 1)]; }

  std::string ident() { return one<std::string>({"a", "b", "count", "name", "item", "total", "node", "cfg"}); }
  std::string type() {
    return one<std::string>({"int", "long", "boolean", "String", "Item", "List<String>", "Map<String, Item>"});
  }
  std::string literal() { return one<std::string>({"0", "42", "true", "false", "null", "\"s\"", "'c'", "1L"}); }

  std::string expr() {
    if (depth > 2) return pick(0, 1) ? ident() : literal();
    ++depth;
    std::string out;
    switch (pick(0, 8)) {
      case 0: out = ident(); break;
      case 1: out = literal(); break;
      case 2: out = ident() + "." + ident() + "(" + args() + ")"; break;
      case 3: out = "new " + one<std::string>({"Item", "Box<String>", "Foo"}) + "(" + args() + ")"; break;
      case 4: out = expr() + " " + one<std::string>({"+", "-", "*", "==", "<", "&&", "||"}) + " " + expr(); break;
      case 5: out = "this." + ident(); break;
      case 6: out = "(" + one<std::string>({"int", "String", "Item"}) + ") " + ident(); break;
      case 7: out = ident() + "(" + args() + ")"; break;
      default: out = ident() + "." + ident(); break;
    }
    --depth;
    return out;
  }

  std::string args() {
    std::string out;
    int n = pick(0, 3);
    for (int i = 0; i < n; ++i) out += (i ? ", " : "") + expr();
    return out;
  }

  std::string block(int ind) {
    std::string pad(ind, ' ');
    std::string out = "{\n";
    int n = pick(0, 4);
    for (int i = 0; i < n; ++i) out += stmt(ind + 4);
    return out + pad + "}";
  }

  std::string stmt(int ind) {
    std::string pad(ind, ' ');
    int k = depth > 1 ? pick(0, 2) : pick(0, 8);
    ++depth;
    std::string out;
    switch (k) {
      case 0: out = pad + type() + " " + ident() + " = " + expr() + ";\n"; break;
      case 1: out = pad + ident() + "." + ident() + "(" + args() + ");\n"; break;
      case 2: out = pad + ident() + " = " + expr() + ";\n"; break;
      case 3: out = pad + "if (" + expr() + ") " + block(ind) + "\n"; break;
      case 4: out = pad + "if (" + expr() + ") " + block(ind) + " else " + block(ind) + "\n"; break;
      case 5: out = pad + "while (" + expr() + ") " + block(ind) + "\n"; break;
      case 6: out = pad + "for (int i = 0; i < " + ident() + "; i = i + 1) " + block(ind) + "\n"; break;
      case 7: out = pad + "for (String s : " + ident() + ") " + block(ind) + "\n"; break;
      default: out = pad + (pick(0, 1) ? "return " + expr() + ";\n" : "throw new RuntimeException(\"x\");\n");
    }
    --depth;
    return out;
  }

  std::string member(int i) {
    switch (pick(0, 3)) {
      case 0: return "    private " + type() + " f" + std::to_string(i) + (pick(0, 1) ? " = " + literal() : "") + ";\n";
      case 1: return "    public C(" + params() + ") " + block(4) + "\n";
      case 2: return "    @Override\n    public String m" + std::to_string(i) + "(" + params() + ") throws Exception " + block(4) + "\n";
      default: return "    protected static void m" + std::to_string(i) + "(" + params() + ") " + block(4) + "\n";
    }
  }

  std::string params() {
    std::string out;
    int n = pick(0, 3);
    for (int i = 0; i < n; ++i) out += (i ? ", " : "") + type() + " p" + std::to_string(i);
    return out;
  }

  std::string unit() {
    std::string out = "package " + one<std::string>({"a", "a.b", "org.x.y"}) + ";\n\n";
    int imports = pick(0, 3);
    for (int i = 0; i < imports; ++i) out += "import java.util." + one<std::string>({"List", "Map", "Set"}) + ";\n";
    out += "\npublic class C" + std::string(pick(0, 1) ? " extends Base" : "") +
           std::string(pick(0, 1) ? " implements Runnable, Comparable<C>" : "") + " {\n";
    int n = pick(0, 6);
    for (int i = 0; i < n; ++i) out += member(i);
    if (pick(0, 2) == 0) out += "    enum Mode {\n        ON, OFF\n    }\n";
    if (pick(0, 2) == 0) out += "    interface Hook {\n        void fire(int n);\n    }\n";
    return out + "}\n";
  }
};

// Copy with fresh pre-order ids, so the differ cannot lean on shared ids.
inline SyntaxTree renumber(const SyntaxTree& t) {
  SyntaxTree out;
  std::function<NodeId(NodeId)> copy = [&](NodeId n) {
    NodeId c = out.create(t.kind(n), t.value(n));
    for (NodeId k : t.children(n)) out.append_child(c, copy(k));
    return c;
  };
  out.set_root(copy(t.root()));
  return out;
}

// ---- line triples for diff3

struct Triple {
  std::string base, left, right, expected;
};

inline std::string join_lines(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& l : v) out += l + "\n";
  return out;
}

// Left and right edit disjoint line ranges, separated by at least one
// untouched line. `expected` applies both patches independently.
inline Triple disjoint_triple(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int n = pick(6, 30);
  std::vector<std::string> base;
  for (int i = 0; i < n; ++i) base.push_back("line " + std::to_string(i) + ";");
  int split = pick(2, n - 3);  // left edits [0, split-1), right edits [split+1, n)
  auto patch = [&](int lo, int hi, char tag) {
    // one replaced/inserted/deleted range inside [lo, hi)
    int from = pick(lo, std::max(lo, hi - 1));
    int len = pick(0, std::min(3, hi - from));
    int ins = pick(len == 0 ? 1 : 0, 3);
    std::vector<std::string> repl;
    for (int i = 0; i < ins; ++i) repl.push_back(std::string(1, tag) + std::to_string(from) + "_" + std::to_string(i));
    return std::tuple{from, len, repl};
  };
  auto [lf, ll, lr] = patch(0, split - 1, 'L');
  auto [rf, rl, rr] = patch(split + 1, n, 'R');
  auto apply = [&](std::vector<std::string> v, int from, int len, const std::vector<std::string>& repl) {
    v.erase(v.begin() + from, v.begin() + from + len);
    v.insert(v.begin() + from, repl.begin(), repl.end());
    return v;
  };
  Triple t;
  t.base = join_lines(base);
  t.left = join_lines(apply(base, lf, ll, lr));
  t.right = join_lines(apply(base, rf, rl, rr));
  // right's range lies after left's, so apply it first
  t.expected = join_lines(apply(apply(base, rf, rl, rr), lf, ll, lr));
  return t;
}

// ---- brute-force closure oracle

// Reflexive-transitive reachability over `edges`, restricted to nodes in
// `allowed`, starting from `seeds` (Floyd-Warshall over the node set).
template <class K>
std::set<K> brute_closure(const std::set<K>& seeds, const std::map<K, std::set<K>>& edges,
                          const std::set<K>& allowed) {
  std::vector<K> nodes(allowed.begin(), allowed.end());
  for (const K& s : seeds) {
    if (!allowed.count(s)) nodes.push_back(s);
  }
  std::size_t n = nodes.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    auto it = edges.find(nodes[i]);
    if (it == edges.end()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (it->second.count(nodes[j]) && allowed.count(nodes[j])) reach[i][j] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  std::set<K> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seeds.count(nodes[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) out.insert(nodes[j]);
    }
  }
  return out;
}

// ---- intent.json

// 1-based line of the n-th line of `text` that contains `needle`.
inline int line_of(const std::string& text, const std::string& needle, int occurrence = 1) {
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find(needle) != std::string::npos && --occurrence == 0) return static_cast<int>(i) + 1;
  }
  return -1;
}


struct Intent {
  std::string code;
  std::string file;
  std::string line_text;
  int occurrence = 1;
  int offset = 0;

  int line(const FileTree& am) const { return line_of(am.at(file), line_text, occurrence) + offset; }
};

inline std::vector<Intent> read_intent(const std::string& id) {
  fs::path p = scenario_dir(id) / "intent.json";
  std::vector<Intent> out;
  if (!fs::exists(p)) return out;
  Json j = Json::parse(read_file(p));
  for (const auto& c : j["conflicts"]) {
    out.push_back({c["code"], c["file"], c["line_text"], c.value("occurrence", 1), c.value("offset", 0)});
  }
  return out;
}

// Do the detected conflicts match the intended codes, with a site covering
// each intended line?
inline std::string intent_mismatch(const std::string& id, const ScenarioRun& run) {
  auto intents = read_intent(id);
  if (intents.size() != run.conflicts.size()) {
    return id + ": " + std::to_string(run.conflicts.size()) + " conflicts, intended " +
           std::to_string(intents.size());
  }
  std::multiset<std::string> want, got;
  for (const Intent& in : intents) {
    want.insert(in.code + "@" + in.file + ":" + std::to_string(in.line(run.merge.am)));
  }
  for (const Conflict& c : run.conflicts) {
    bool hit = false;
    for (const Intent& in : intents) {
      int line = in.line(run.merge.am);
      bool covered = std::any_of(c.sites.begin(), c.sites.end(), [&](const UseSite& s) {
        return s.file == in.file && s.span.begin.line <= line && line <= s.span.end.line;
      });
      if (conflict_code(c.type) == in.code && covered) {
        got.insert(in.code + "@" + in.file + ":" + std::to_string(line));
        hit = true;
        break;
      }
    }
    if (!hit) got.insert(conflict_code(c.type) + "@?");
  }
  if (want != got) return id + ": detected sites differ from intent";
  return {};
}

inline std::vector<std::string> fixtures_with_prefix(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& d : scenario_dirs(corpus_dir())) {
    std::string id = d.filename().string();
    if (id.rfind(prefix, 0) == 0) out.push_back(id);
  }
  return out;
}

inline std::string read_expected(const std::string& id, const std::string& path) {
  return read_file(scenario_dir(id) / "expected" / path);
}

inline std::string read_golden(const std::string& id, const std::string& strategy, const std::string& path) {
  return read_file(scenario_dir(id) / "golden" / strategy / path);
}

inline const Resolution* find_resolution(const ScenarioRun& run, Strategy s, std::size_t conflict = 0) {
  for (const Resolution& r : run.resolutions) {
    if (r.strategy == s && r.conflict == conflict) return &r;
  }
  return nullptr;
}

// Hand-built example: subject is field `e`, its uses are the FieldAccess
// nodes named `e` in `before`.
inline EditExample field_example(const std::string& before, const std::string& after) {
  EditExample ex;
  ex.host = "p.A.f(B)";
  ex.before = parse(before).tree;
  ex.after = parse(after).tree;
  ex.script = diff_trees(ex.before, ex.after);
  ex.subject = "p.B.e";
  ex.subject_kind = EntityKind::Field;
  ex.subject_name = "e";
  for (NodeId n : ex.before.preorder(ex.before.root())) {
    if (ex.before.kind(n) == NodeKind::FieldAccess && ex.before.value(n) == "e") ex.use_nodes.insert(n);
  }
  return ex;
}

// Random method bodies over a few variables; the after version renames some
// uses of `a.e` and perturbs some literals.
struct ExampleGen {
  std::mt19937 rng;
  explicit ExampleGen(unsigned seed) : rng(seed) {}
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  std::pair<std::string, std::string> make() {
    static const char* vars[] = {"x", "y", "z", "w"};
    std::string b, a;
    int n = pick(4, 20);
    int depth = 0;
    for (int i = 0; i < n; ++i) {
      std::string pad(8 + 4 * depth, ' ');
      std::string v = vars[pick(0, 3)];
      std::string u = vars[pick(0, 3)];
      int lit = pick(0, 9);
      bool touch = pick(0, 2) == 0;
      bool bump = pick(0, 1) == 0;
      switch (pick(0, 4)) {
        case 0:
          b += pad + "int " + v + " = a.e + " + u + ";\n";
          a += pad + "int " + v + " = a." + (touch ? "g" : "e") + " + " + u + ";\n";
          break;
        case 1:
          b += pad + v + " = " + u + " + " + std::to_string(lit) + ";\n";
          a += pad + v + " = " + u + " + " + std::to_string(bump ? lit + 1 : lit) + ";\n";
          break;
        case 2:
          b += pad + "use(" + v + ", " + std::to_string(lit) + ");\n";
          a += pad + "use(" + v + ", " + std::to_string(bump ? lit + 1 : lit) + ");\n";
          break;
        case 3:
          if (depth < 2) {
            std::string head = pad + "if (" + v + " < " + std::to_string(lit) + ") {\n";
            b += head;
            a += bump ? pad + "if (" + v + " < " + std::to_string(lit + 1) + ") {\n" : head;
            ++depth;
            break;
          }
          [[fallthrough]];
        default:
          if (depth > 0) {
            --depth;
            std::string close(8 + 4 * depth, ' ');
            b += close + "}\n";
            a += close + "}\n";
          } else {
            b += pad + "a.e = " + v + ";\n";
            a += pad + "a." + (touch ? "g" : "e") + " = " + v + ";\n";
          }
      }
    }
    while (depth > 0) {
      --depth;
      std::string close(8 + 4 * depth, ' ');
      b += close + "}\n";
      a += close + "}\n";
    }
    std::string head = "class A {\n    void f(B a) {\n        int x = 0;\n        int y = 1;\n        int z = 2;\n        int w = 3;\n";
    return {head + b + "    }\n}\n", head + a + "    }\n}\n"};
  }
};

// Refined set recomputed by brute force from the dependence relation.
inline std::set<std::size_t> oracle_refined(const Refinement& r) {
  std::set<StatementKey> edited, seeds;
  for (const auto& [i, key] : r.op_statement) edited.insert(key);
  for (std::size_t i : r.e1) {
    auto it = r.op_statement.find(i);
    if (it != r.op_statement.end()) seeds.insert(it->second);
  }
  std::set<StatementKey> closed = brute_closure(seeds, r.dependences, edited);
  std::set<std::size_t> out = r.e1;
  for (const auto& [i, key] : r.op_statement) {
    if (closed.count(key)) out.insert(i);
  }
  return out;
}

inline std::vector<EditExample> corpus_examples() {
  std::vector<EditExample> out;
  for (const auto& dir : scenario_dirs(corpus_dir())) {
    ScenarioRun run = run_scenario(dir / "base", dir / "left", dir / "right", dir.filename().string());
    for (const Conflict& c : run.conflicts) {
      for (EditExample& ex : mine_examples(c, run.fw)) out.push_back(std::move(ex));
    }
  }
  return out;
}

}  // namespace mwtest
