#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mergeweaver/syntax.hpp"

namespace mergeweaver {

enum class EditOpType : std::uint8_t { Update, Add, Delete, Move };

inline std::string_view edit_op_name(EditOpType t) {
  switch (t) {
    case EditOpType::Update:
      return "update";
    case EditOpType::Add:
      return "add";
    case EditOpType::Delete:
      return "delete";
    default:
      return "move";
  }
}

/// One tree edit. `t` is the node acted on; for add it is the id the new
/// node receives. `parent`/`index` give the destination of add and move,
/// `kind`/`value` the label and text of an added node, `value` the new text
/// of an update.
struct EditOp {
  EditOpType type = EditOpType::Update;
  NodeId t = kNoNode;
  NodeId parent = kNoNode;
  std::size_t index = 0;
  NodeKind kind = NodeKind::Name;
  std::string value;

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

inline std::string describe(const EditOp& op) {
  std::string s = std::string(edit_op_name(op.type)) + "(" + std::to_string(op.t);
  switch (op.type) {
    case EditOpType::Update:
      return s + ", \"" + op.value + "\")";
    case EditOpType::Add:
      return s + ", " + std::to_string(op.parent) + ", " + std::to_string(op.index) + ", " +
             std::string(kind_name(op.kind)) + ", \"" + op.value + "\")";
    case EditOpType::Move:
      return s + ", " + std::to_string(op.parent) + ", " + std::to_string(op.index) + ")";
    default:
      return s + ")";
  }
}

/// Ops plus the node matching they were derived from (before id -> after id).
struct EditScript {
  std::vector<EditOp> ops;
  std::map<NodeId, NodeId> matching;
  std::map<NodeId, NodeId> added;  // id given to an added node -> after id

  bool empty() const { return ops.empty(); }
};

class DanglingOp : public std::runtime_error {
 public:
  explicit DanglingOp(const EditOp& op)
      : std::runtime_error("dangling edit op: " + describe(op)), op_(op) {}
  const EditOp& op() const { return op_; }

 private:
  EditOp op_;
};

namespace detail {

class TreeMatcher {
 public:
  TreeMatcher(const SyntaxTree& a, const SyntaxTree& b) : a_(a), b_(b) {}

  std::map<NodeId, NodeId> run() {
    if (a_.empty() || b_.empty()) return {};
    hash_all(a_, ha_, size_a_);
    hash_all(b_, hb_, size_b_);
    top_down();
    if (!fwd_.count(a_.root()) && a_.kind(a_.root()) == b_.kind(b_.root()) &&
        !bwd_.count(b_.root())) {
      link(a_.root(), b_.root());
    }
    bottom_up();
    recovery();
    return fwd_;
  }

 private:
  void hash_all(const SyntaxTree& t, std::unordered_map<NodeId, std::size_t>& h,
                std::unordered_map<NodeId, std::size_t>& size) {
    for (NodeId id : t.postorder(t.root())) {
      std::size_t v = std::hash<std::string>{}(t.value(id)) * 31 +
                      static_cast<std::size_t>(t.kind(id)) + 0x9e3779b9;
      std::size_t n = 1;
      for (NodeId c : t.children(id)) {
        v = v * 1000003 ^ (h[c] + 0x9e3779b97f4a7c15ULL + (v << 6) + (v >> 2));
        n += size[c];
      }
      h[id] = v;
      size[id] = n;
    }
  }

  void link(NodeId x, NodeId y) {
    fwd_[x] = y;
    bwd_[y] = x;
  }

  void link_subtree(NodeId x, NodeId y) {
    link(x, y);
    const auto& xc = a_.children(x);
    const auto& yc = b_.children(y);
    for (std::size_t i = 0; i < xc.size() && i < yc.size(); ++i) link_subtree(xc[i], yc[i]);
  }

  // Pass 1: subtrees isomorphic and unique on both sides, largest first.
  void top_down() {
    std::unordered_map<std::size_t, std::vector<NodeId>> by_hash_a, by_hash_b;
    for (NodeId id : a_.preorder()) by_hash_a[ha_[id]].push_back(id);
    for (NodeId id : b_.preorder()) by_hash_b[hb_[id]].push_back(id);
    std::vector<NodeId> order = a_.preorder();
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId x, NodeId y) { return size_a_[x] > size_a_[y]; });
    for (NodeId x : order) {
      if (fwd_.count(x)) continue;
      const auto& same_a = by_hash_a[ha_[x]];
      auto it = by_hash_b.find(ha_[x]);
      if (it == by_hash_b.end() || same_a.size() != 1 || it->second.size() != 1) continue;
      NodeId y = it->second.front();
      if (bwd_.count(y) || !structurally_equal(a_, x, b_, y)) continue;
      if (inside_matched(x)) continue;
      link_subtree(x, y);
    }
  }

  bool inside_matched(NodeId x) const {
    for (NodeId p = a_.parent(x); p != kNoNode; p = a_.parent(p)) {
      if (fwd_.count(p)) return true;
    }
    return false;
  }

  // Pass 2: containers whose matched descendants mostly land in one
  // same-kind container on the other side.
  void bottom_up() {
    std::vector<NodeId> b_nodes = b_.preorder();
    for (NodeId x : a_.postorder(a_.root())) {
      if (fwd_.count(x) || a_.children(x).empty()) continue;
      std::vector<NodeId> desc = a_.preorder(x);
      desc.erase(desc.begin());
      std::map<NodeId, int> votes;
      for (NodeId d : desc) {
        auto it = fwd_.find(d);
        if (it == fwd_.end()) continue;
        for (NodeId p = b_.parent(it->second); p != kNoNode; p = b_.parent(p)) {
          if (!bwd_.count(p) && b_.kind(p) == a_.kind(x)) ++votes[p];
        }
      }
      NodeId best = kNoNode;
      double best_score = 0.5;
      for (NodeId y : b_nodes) {
        auto v = votes.find(y);
        if (v == votes.end()) continue;
        double dice = 2.0 * v->second / static_cast<double>(desc.size() + size_b_[y] - 1);
        if (dice > best_score) {
          best_score = dice;
          best = y;
        }
      }
      if (best != kNoNode) link(x, best);
    }
  }

  // Recovery: below every matched pair, pair up unmatched children, first by
  // equal kind and value (in order), then by equal kind (in order).
  void recovery() {
    for (NodeId y : b_.preorder()) {
      auto it = bwd_.find(y);
      if (it == bwd_.end()) continue;
      NodeId x = it->second;
      std::vector<NodeId> ua;
      std::vector<NodeId> ub;
      for (NodeId c : a_.children(x)) {
        if (!fwd_.count(c)) ua.push_back(c);
      }
      for (NodeId c : b_.children(y)) {
        if (!bwd_.count(c)) ub.push_back(c);
      }
      if (ua.empty() || ub.empty()) continue;
      align(ua, ub, true);
      std::vector<NodeId> ra;
      std::vector<NodeId> rb;
      for (NodeId c : ua) {
        if (!fwd_.count(c)) ra.push_back(c);
      }
      for (NodeId c : ub) {
        if (!bwd_.count(c)) rb.push_back(c);
      }
      align(ra, rb, false);
    }
  }

  void align(const std::vector<NodeId>& xs, const std::vector<NodeId>& ys, bool with_value) {
    auto same = [&](NodeId x, NodeId y) {
      return a_.kind(x) == b_.kind(y) && (!with_value || a_.value(x) == b_.value(y));
    };
    std::size_t n = xs.size();
    std::size_t m = ys.size();
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = m; j-- > 0;) {
        dp[i][j] = same(xs[i], ys[j]) ? dp[i + 1][j + 1] + 1 : std::max(dp[i + 1][j], dp[i][j + 1]);
      }
    }
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < n && j < m) {
      if (same(xs[i], ys[j]) && dp[i][j] == dp[i + 1][j + 1] + 1) {
        link(xs[i], ys[j]);
        ++i;
        ++j;
      } else if (dp[i + 1][j] >= dp[i][j + 1]) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  const SyntaxTree& a_;
  const SyntaxTree& b_;
  std::unordered_map<NodeId, std::size_t> ha_, hb_, size_a_, size_b_;
  std::map<NodeId, NodeId> fwd_, bwd_;
};

inline EditOp delete_op(NodeId id) {
  EditOp op;
  op.type = EditOpType::Delete;
  op.t = id;
  return op;
}

inline void apply_op(SyntaxTree& t, const EditOp& op) {
  switch (op.type) {
    case EditOpType::Update:
      if (!t.contains(op.t)) throw DanglingOp(op);
      t.node(op.t).value = op.value;
      break;
    case EditOpType::Delete:
      if (!t.contains(op.t)) throw DanglingOp(op);
      t.erase_subtree(op.t);
      break;
    case EditOpType::Add: {
      if (t.contains(op.t)) throw DanglingOp(op);
      if (op.parent == kNoNode) {
        if (!t.empty()) t.erase_subtree(t.root());
        t.create_with_id(op.t, op.kind, op.value);
        t.set_root(op.t);
        break;
      }
      if (!t.contains(op.parent) || op.index > t.children(op.parent).size()) throw DanglingOp(op);
      t.create_with_id(op.t, op.kind, op.value);
      t.insert_child(op.parent, op.t, op.index);
      break;
    }
    case EditOpType::Move: {
      if (!t.contains(op.t) || !t.contains(op.parent) || t.is_ancestor(op.t, op.parent)) {
        throw DanglingOp(op);
      }
      t.detach(op.t);
      if (op.index > t.children(op.parent).size()) throw DanglingOp(op);
      t.insert_child(op.parent, op.t, op.index);
      break;
    }
  }
}

}  // namespace detail

/// Applies ops in order to a copy of `tree`.
inline SyntaxTree apply_script(const std::vector<EditOp>& ops, const SyntaxTree& tree) {
  SyntaxTree out = tree;
  for (const EditOp& op : ops) detail::apply_op(out, op);
  return out;
}

inline SyntaxTree apply_script(const EditScript& script, const SyntaxTree& tree) {
  return apply_script(script.ops, tree);
}

/// Node matching between two trees (before id -> after id).
inline std::map<NodeId, NodeId> match_trees(const SyntaxTree& before, const SyntaxTree& after) {
  return detail::TreeMatcher(before, after).run();
}

/// Edit script turning `before` into `after`. Existing nodes keep their
/// `before` ids; added nodes get fresh ids above `before.next_id()`.
inline EditScript diff_trees(const SyntaxTree& before, const SyntaxTree& after) {
  EditScript script;
  script.matching = match_trees(before, after);
  if (after.empty()) {
    if (!before.empty()) {
      for (NodeId id : before.postorder(before.root())) script.ops.push_back(detail::delete_op(id));
    }
    return script;
  }
  SyntaxTree work = before;
  std::map<NodeId, NodeId> partner;  // after id -> working id
  for (auto [x, y] : script.matching) partner[y] = x;
  NodeId next = before.next_id();

  auto emit = [&](EditOp op) {
    detail::apply_op(work, op);
    script.ops.push_back(std::move(op));
  };

  for (NodeId y : after.preorder()) {
    NodeId py = after.parent(y);
    NodeId w = py == kNoNode ? kNoNode : partner.at(py);
    std::size_t pos = py == kNoNode ? 0 : after.index_in_parent(y);
    NodeId prev = pos == 0 ? kNoNode : partner.at(after.children(py)[pos - 1]);
    auto desired_index = [&]() -> std::size_t {
      return prev == kNoNode ? 0 : work.index_in_parent(prev) + 1;
    };
    auto it = partner.find(y);
    if (it == partner.end()) {
      NodeId id = next++;
      if (py == kNoNode && !work.empty()) {
        // root replaced wholesale
        for (NodeId old : work.postorder(work.root())) {
          if (old != work.root()) emit(detail::delete_op(old));
        }
      }
      emit({EditOpType::Add, id, w, py == kNoNode ? 0 : desired_index(), after.kind(y),
            after.value(y)});
      partner[y] = id;
      script.added[id] = y;
      continue;
    }
    NodeId v = it->second;
    if (work.value(v) != after.value(y)) emit({EditOpType::Update, v, kNoNode, 0, NodeKind::Name, after.value(y)});
    if (py == kNoNode) continue;
    bool in_place = work.parent(v) == w &&
                    (prev == kNoNode || work.index_in_parent(v) > work.index_in_parent(prev));
    if (!in_place) {
      std::size_t idx = desired_index();
      // detaching v first shifts prev left when both share the parent
      if (prev != kNoNode && work.parent(v) == w &&
          work.index_in_parent(v) < work.index_in_parent(prev)) {
        --idx;
      }
      emit({EditOpType::Move, v, w, idx, NodeKind::Name, {}});
    }
  }
  // Delete every working node without an after partner, children first.
  std::set<NodeId> kept;
  for (auto& [y, x] : partner) kept.insert(x);
  if (!work.empty()) {
    for (NodeId id : work.postorder(work.root())) {
      if (!kept.count(id)) emit(detail::delete_op(id));
    }
  }
  return script;
}

}  // namespace mergeweaver
