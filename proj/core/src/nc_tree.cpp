#include "excseq/nc_tree.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <stdexcept>

namespace excseq {
namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int size) : parent(static_cast<std::size_t>(size)) {
    for (int v = 0; v < size; ++v) parent[static_cast<std::size_t>(v)] = v;
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  // False when a and b are already connected.
  bool unite(int a, int b) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
    return true;
  }
};

// Pairwise interior-crossing masks over the lexicographic chord list.
std::vector<std::uint64_t> crossing_masks(const std::vector<Chord>& chords) {
  std::vector<std::uint64_t> masks(chords.size(), 0);
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      if (meet_type(chords[a], chords[b]).kind == MeetType::Kind::InteriorCross) {
        masks[a] |= std::uint64_t{1} << b;
        masks[b] |= std::uint64_t{1} << a;
      }
    }
  }
  return masks;
}

struct TreeSearch {
  int n;
  const std::vector<Chord>& chords;
  const std::vector<std::uint64_t>& cross;
  const std::function<void(const NCTree&)>& emit;
  std::vector<Chord> chosen;

  void extend(std::size_t from, std::uint64_t blocked, const UnionFind& components) {
    if (static_cast<int>(chosen.size()) == n) {
      emit(NCTree{n, chosen});
      return;
    }
    const std::size_t needed = static_cast<std::size_t>(n) - chosen.size();
    for (std::size_t c = from; c + needed <= chords.size(); ++c) {
      if (blocked & (std::uint64_t{1} << c)) continue;
      UnionFind next = components;
      if (!next.unite(chords[c].p, chords[c].q)) continue;  // would close a cycle
      chosen.push_back(chords[c]);
      extend(c + 1, blocked | cross[c], next);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::string NCTree::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < chords.size(); ++k) {
    if (k > 0) out += ",";
    out += chords[k].to_string();
  }
  return out + "}";
}

TreeCheck check_nc_spanning_tree(const std::vector<Chord>& chords, int n) {
  checked_rank(n);
  for (const Chord& c : chords) {
    if (c.n != n)
      throw std::invalid_argument("chord " + c.to_string() + " has rank " +
                                  std::to_string(c.n) + ", expected " + std::to_string(n));
  }
  if (static_cast<int>(chords.size()) != n) {
    return {false, TreeDefect::WrongSize,
            "expected " + std::to_string(n) + " chords, got " + std::to_string(chords.size())};
  }
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      if (chords[a] == chords[b]) {
        return {false, TreeDefect::Cycle, "duplicate chord " + chords[a].to_string()};
      }
      if (meet_type(chords[a], chords[b]).kind == MeetType::Kind::InteriorCross) {
        return {false, TreeDefect::Crossing,
                chords[a].to_string() + " crosses " + chords[b].to_string()};
      }
    }
  }
  UnionFind components(n + 1);
  int merges = 0;
  for (const Chord& c : chords) {
    if (!components.unite(c.p, c.q)) {
      return {false, TreeDefect::Cycle, "adding " + c.to_string() + " closes a cycle"};
    }
    ++merges;
  }
  // n acyclic edges on n+1 points always connect; kept as a guard.
  if (merges != n) return {false, TreeDefect::Disconnected, "endpoint graph is disconnected"};
  return {true, TreeDefect::None, ""};
}

NCTree make_nc_tree(std::vector<Chord> chords, int n) {
  std::sort(chords.begin(), chords.end());
  const TreeCheck check = check_nc_spanning_tree(chords, n);
  if (!check.ok) throw std::invalid_argument("not a non-crossing spanning tree: " + check.detail);
  return NCTree{n, std::move(chords)};
}

void for_each_nc_tree(int n, const std::function<void(const NCTree&)>& emit) {
  checked_rank(n);
  const std::vector<Chord> chords = all_chords(n);
  const std::vector<std::uint64_t> cross = crossing_masks(chords);
  TreeSearch search{n, chords, cross, emit, {}};
  search.chosen.reserve(static_cast<std::size_t>(n));
  search.extend(0, 0, UnionFind(n + 1));
}

std::vector<NCTree> enumerate_nc_trees(int n, int jobs) {
  checked_rank(n);
  if (jobs <= 1) {
    std::vector<NCTree> trees;
    for_each_nc_tree(n, [&](const NCTree& t) { trees.push_back(t); });
    return trees;
  }

  // Partition on the first chord index; merging the per-index buckets in
  // index order reproduces the sequential order exactly.
  const std::vector<Chord> chords = all_chords(n);
  const std::vector<std::uint64_t> cross = crossing_masks(chords);
  const std::size_t first_count = chords.size() - static_cast<std::size_t>(n) + 1;

  std::vector<std::vector<NCTree>> buckets(first_count);
  const auto run_first = [&](std::size_t first) {
    std::vector<NCTree>& local = buckets[first];
    const std::function<void(const NCTree&)> emit = [&](const NCTree& t) { local.push_back(t); };
    TreeSearch search{n, chords, cross, emit, {}};
    search.chosen.reserve(static_cast<std::size_t>(n));
    UnionFind components(n + 1);
    components.unite(chords[first].p, chords[first].q);
    search.chosen.push_back(chords[first]);
    search.extend(first + 1, cross[first], components);
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), first_count);
  std::vector<std::future<void>> tasks;
  tasks.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t first = w; first < first_count; first += workers) run_first(first);
    }));
  }
  for (auto& task : tasks) task.get();

  std::vector<NCTree> trees;
  for (const auto& bucket : buckets) trees.insert(trees.end(), bucket.begin(), bucket.end());
  return trees;
}

BigNat nc_tree_count(int n) {
  checked_rank(n);
  return BigNat::binomial(3 * n, n).div_small_exact(2 * static_cast<std::uint64_t>(n) + 1);
}

}  // namespace excseq
