#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mergeweaver {

class TextualConflict : public std::runtime_error {
 public:
  TextualConflict(std::string file, std::string region)
      : std::runtime_error("textual conflict in " + file + ": " + region),
        file_(std::move(file)),
        region_(std::move(region)) {}
  const std::string& file() const { return file_; }
  const std::string& region() const { return region_; }

 private:
  std::string file_;
  std::string region_;
};

/// Splits text into lines that keep their terminators, so concatenation
/// restores the input exactly.
inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    std::size_t end = nl == std::string_view::npos ? text.size() : nl + 1;
    out.emplace_back(text.substr(start, end - start));
    start = end;
  }
  return out;
}

/// Longest-common-subsequence alignment: pairs (i, j) with a[i] == b[j],
/// increasing in both coordinates.
inline std::vector<std::pair<std::size_t, std::size_t>> lcs_pairs(
    const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::size_t n = a.size();
  std::size_t m = b.size();
  // trim common prefix/suffix first; keeps the table small for typical edits
  std::size_t pre = 0;
  while (pre < n && pre < m && a[pre] == b[pre]) ++pre;
  std::size_t suf = 0;
  while (suf < n - pre && suf < m - pre && a[n - 1 - suf] == b[m - 1 - suf]) ++suf;
  std::size_t rn = n - pre - suf;
  std::size_t rm = m - pre - suf;
  std::vector<std::vector<std::uint32_t>> dp(rn + 1, std::vector<std::uint32_t>(rm + 1, 0));
  for (std::size_t i = rn; i-- > 0;) {
    for (std::size_t j = rm; j-- > 0;) {
      dp[i][j] = a[pre + i] == b[pre + j] ? dp[i + 1][j + 1] + 1
                                          : std::max(dp[i + 1][j], dp[i][j + 1]);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < pre; ++k) out.emplace_back(k, k);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < rn && j < rm) {
    if (a[pre + i] == b[pre + j]) {
      out.emplace_back(pre + i, pre + j);
      ++i;
      ++j;
    } else if (dp[i + 1][j] >= dp[i][j + 1]) {
      ++i;
    } else {
      ++j;
    }
  }
  for (std::size_t k = 0; k < suf; ++k) out.emplace_back(n - suf + k, m - suf + k);
  return out;
}

namespace detail {

inline std::string join_range(const std::vector<std::string>& lines, std::size_t from,
                              std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) out += lines[i];
  return out;
}

}  // namespace detail

/// diff3 over full texts; throws TextualConflict when both sides change the
/// same unstable region differently.
inline std::string merge_text(const std::string& file, std::string_view base,
                              std::string_view left, std::string_view right) {
  auto b = split_lines(base);
  auto l = split_lines(left);
  auto r = split_lines(right);
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> ml(b.size(), kNone);
  std::vector<std::size_t> mr(b.size(), kNone);
  for (auto [i, j] : lcs_pairs(b, l)) ml[i] = j;
  for (auto [i, j] : lcs_pairs(b, r)) mr[i] = j;

  std::string out;
  std::size_t bo = 0;
  std::size_t lo = 0;
  std::size_t ro = 0;
  auto resolve = [&](std::size_t bend, std::size_t lend, std::size_t rend) {
    std::string bs = detail::join_range(b, bo, bend);
    std::string ls = detail::join_range(l, lo, lend);
    std::string rs = detail::join_range(r, ro, rend);
    if (ls == bs) {
      out += rs;
    } else if (rs == bs || ls == rs) {
      out += ls;
    } else {
      throw TextualConflict(file, "base lines " + std::to_string(bo + 1) + "-" +
                                      std::to_string(bend));
    }
  };
  while (true) {
    if (bo < b.size() && ml[bo] == lo && mr[bo] == ro) {
      out += b[bo];
      ++bo;
      ++lo;
      ++ro;
      continue;
    }
    std::size_t k = bo;
    while (k < b.size() && (ml[k] == kNone || mr[k] == kNone)) ++k;
    if (k == b.size()) {
      resolve(b.size(), l.size(), r.size());
      break;
    }
    resolve(k, ml[k], mr[k]);
    bo = k;
    lo = ml[k];
    ro = mr[k];
  }
  return out;
}

/// Three-way merge of one file; absent arguments mean the file does not
/// exist in that version. Returns nullopt when the merged file is deleted.
inline std::optional<std::string> merge_file(const std::string& path,
                                             const std::optional<std::string>& base,
                                             const std::optional<std::string>& left,
                                             const std::optional<std::string>& right) {
  if (!base) {
    if (left && right) {
      if (*left == *right) return left;
      return merge_text(path, "", *left, *right);
    }
    return left ? left : right;
  }
  if (!left && !right) return std::nullopt;
  if (!left) {
    if (*right == *base) return std::nullopt;
    throw TextualConflict(path, "deleted in left, modified in right");
  }
  if (!right) {
    if (*left == *base) return std::nullopt;
    throw TextualConflict(path, "deleted in right, modified in left");
  }
  return merge_text(path, *base, *left, *right);
}

using FileTree = std::map<std::string, std::string>;  // relative path -> text

struct MergeScenario {
  FileTree base;
  FileTree left;
  FileTree right;
  FileTree am;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& p, std::string_view text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

/// All `.java` files below `dir`, keyed by forward-slash relative path.
inline FileTree read_tree(const std::filesystem::path& dir) {
  FileTree out;
  if (!std::filesystem::exists(dir)) return out;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".java") continue;
    out[std::filesystem::relative(entry.path(), dir).generic_string()] = read_file(entry.path());
  }
  return out;
}

inline FileTree merge_trees(const FileTree& base, const FileTree& left, const FileTree& right) {
  std::vector<std::string> paths;
  for (const auto* tree : {&base, &left, &right}) {
    for (const auto& [p, _] : *tree) paths.push_back(p);
  }
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  auto get = [](const FileTree& t, const std::string& p) -> std::optional<std::string> {
    auto it = t.find(p);
    if (it == t.end()) return std::nullopt;
    return it->second;
  };
  FileTree out;
  for (const std::string& p : paths) {
    auto merged = merge_file(p, get(base, p), get(left, p), get(right, p));
    if (merged) out[p] = *merged;
  }
  return out;
}

inline MergeScenario merge_scenario(const std::filesystem::path& base_dir,
                                    const std::filesystem::path& left_dir,
                                    const std::filesystem::path& right_dir) {
  MergeScenario s;
  s.base = read_tree(base_dir);
  s.left = read_tree(left_dir);
  s.right = read_tree(right_dir);
  s.am = merge_trees(s.base, s.left, s.right);
  return s;
}

/// Unified diff with three lines of context; empty when texts are equal.
inline std::string unified_diff(std::string_view before, std::string_view after,
                                const std::string& from_name, const std::string& to_name) {
  auto a = split_lines(before);
  auto b = split_lines(after);
  if (a == b) return {};
  auto pairs = lcs_pairs(a, b);
  // edit script as a sequence of (tag, a-index, b-index)
  struct Line {
    char tag;
    std::size_t ai;
    std::size_t bi;
  };
  std::vector<Line> script;
  std::size_t i = 0;
  std::size_t j = 0;
  for (auto [pi, pj] : pairs) {
    while (i < pi) script.push_back({'-', i++, j});
    while (j < pj) script.push_back({'+', i, j++});
    script.push_back({' ', i++, j++});
  }
  while (i < a.size()) script.push_back({'-', i++, j});
  while (j < b.size()) script.push_back({'+', i, j++});

  auto text_of = [&](const Line& ln) -> std::string {
    std::string s = ln.tag == '+' ? b[ln.bi] : a[ln.ai];
    if (s.empty() || s.back() != '\n') s += "\n\\ No newline at end of file\n";
    return std::string(1, ln.tag) + s;
  };

  constexpr std::size_t kContext = 3;
  std::string out = "--- " + from_name + "\n+++ " + to_name + "\n";
  std::size_t k = 0;
  while (k < script.size()) {
    if (script[k].tag == ' ') {
      ++k;
      continue;
    }
    std::size_t start = k >= kContext ? k - kContext : 0;
    while (start < k && script[start].tag != ' ') ++start;
    std::size_t end = k;
    std::size_t quiet = 0;
    while (end < script.size()) {
      if (script[end].tag == ' ') {
        if (++quiet > 2 * kContext) break;
      } else {
        quiet = 0;
      }
      ++end;
    }
    // trim trailing context to kContext lines
    std::size_t last_change = end;
    while (last_change > k && script[last_change - 1].tag == ' ') --last_change;
    end = std::min(script.size(), last_change + kContext);
    std::size_t a_start = script[start].ai;
    std::size_t b_start = script[start].bi;
    std::size_t a_len = 0;
    std::size_t b_len = 0;
    std::string body;
    for (std::size_t x = start; x < end; ++x) {
      if (script[x].tag != '+') ++a_len;
      if (script[x].tag != '-') ++b_len;
      body += text_of(script[x]);
    }
    auto range = [](std::size_t s, std::size_t len) {
      std::size_t first = len == 0 ? s : s + 1;
      return std::to_string(first) + (len == 1 ? "" : "," + std::to_string(len));
    };
    out += "@@ -" + range(a_start, a_len) + " +" + range(b_start, b_len) + " @@\n" + body;
    k = end;
  }
  return out;
}

}  // namespace mergeweaver
