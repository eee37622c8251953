#include "excseq/exceptional.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <stdexcept>

#include "excseq/chord.hpp"
#include "excseq/homext.hpp"

namespace excseq {

std::string ExceptionalSequence::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < objects.size(); ++k) {
    if (k > 0) out += ", ";
    out += objects[k].to_string();
  }
  return out + ")";
}

ExceptionalSequence sequence_of_modules(int n, const std::vector<Interval>& modules) {
  ExceptionalSequence seq{checked_rank(n), {}};
  seq.objects.reserve(modules.size());
  for (const Interval& m : modules) {
    if (m.n != n)
      throw std::invalid_argument("module " + m.to_string() + " has rank " + std::to_string(m.n) +
                                  ", expected " + std::to_string(n));
    seq.objects.emplace_back(m, 0);
  }
  return seq;
}

bool is_exceptional_pair(const Interval& e, const Interval& f) {
  require_same_rank(e, f);
  if (e == f) throw std::invalid_argument("exceptional pairs are pairs of distinct objects");
  return hom_dim(f, e) == 0 && ext_dim(f, e) == 0;
}

PairRelation pair_relation(const Interval& x, const Interval& y) {
  const bool forward = is_exceptional_pair(x, y);
  const bool backward = is_exceptional_pair(y, x);
  if (forward && backward) return PairRelation::BothOrders;
  if (!forward && !backward) return PairRelation::NeitherOrder;
  return forward ? PairRelation::OnlyFirstSecond : PairRelation::OnlySecondFirst;
}

PairRelation pair_relation_geometric(const Interval& x, const Interval& y) {
  require_same_rank(x, y);
  if (x == y) throw std::invalid_argument("pair relation requires distinct modules");
  const Chord cx(x.n, x.i, x.j);
  const Chord cy(y.n, y.i, y.j);
  const MeetType meet = meet_type(cx, cy);
  switch (meet.kind) {
    case MeetType::Kind::Disjoint:
      return PairRelation::BothOrders;
    case MeetType::Kind::InteriorCross:
      return PairRelation::NeitherOrder;
    case MeetType::Kind::SharedEndpoint:
      break;
  }
  const int n = x.n;
  const bool first =
      (x.i == y.i && distance(x.i, x.j, n) < distance(y.i, y.j, n)) ||
      (x.i == y.j && distance(x.i, x.j, n) < distance(y.j, y.i, n)) ||
      (x.j == y.i && distance(x.j, x.i, n) < distance(y.i, y.j, n)) ||
      (x.j == y.j && distance(x.j, x.i, n) < distance(y.j, y.i, n));
  return first ? PairRelation::OnlyFirstSecond : PairRelation::OnlySecondFirst;
}

std::optional<std::pair<int, int>> first_failing_pair(const ExceptionalSequence& seq) {
  for (std::size_t a = 0; a < seq.objects.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.objects.size(); ++b) {
      const Interval& ma = seq.objects[a].module;
      const Interval& mb = seq.objects[b].module;
      if (ma == mb || !is_exceptional_pair(ma, mb))
        return std::make_pair(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return std::nullopt;
}

bool is_exceptional_sequence(const ExceptionalSequence& seq) {
  if (static_cast<int>(seq.objects.size()) > seq.n) return false;
  for (const ShiftedObject& obj : seq.objects) {
    if (obj.module.n != seq.n) return false;
  }
  return !first_failing_pair(seq).has_value();
}

namespace {

// Successor masks: follow[a] holds the modules b with (module a, module b)
// an exceptional pair, so a legal extension of a prefix is the intersection
// of the follow masks of its members.
struct SequenceSearch {
  int n;
  const std::vector<Interval>& modules;
  const std::vector<std::uint64_t>& follow;
  const std::function<void(const ExceptionalSequence&)>& emit;
  std::vector<std::size_t> picked;

  void extend(std::uint64_t allowed) {
    if (static_cast<int>(picked.size()) == n) {
      ExceptionalSequence seq{n, {}};
      seq.objects.reserve(picked.size());
      for (const std::size_t k : picked) seq.objects.emplace_back(modules[k], 0);
      emit(seq);
      return;
    }
    for (std::uint64_t rest = allowed; rest != 0; rest &= rest - 1) {
      const auto k = static_cast<std::size_t>(__builtin_ctzll(rest));
      picked.push_back(k);
      extend(allowed & follow[k] & ~(std::uint64_t{1} << k));
      picked.pop_back();
    }
  }
};

std::vector<std::uint64_t> follow_masks(const std::vector<Interval>& modules) {
  std::vector<std::uint64_t> follow(modules.size(), 0);
  for (std::size_t a = 0; a < modules.size(); ++a) {
    for (std::size_t b = 0; b < modules.size(); ++b) {
      if (a != b && is_exceptional_pair(modules[a], modules[b]))
        follow[a] |= std::uint64_t{1} << b;
    }
  }
  return follow;
}

}  // namespace

void for_each_complete_sequence(int n, const std::function<void(const ExceptionalSequence&)>& emit) {
  checked_rank(n);
  const std::vector<Interval> modules = indecomposables(n);
  if (modules.size() > 64) throw std::invalid_argument("sequence enumeration supports n <= 10");
  const std::vector<std::uint64_t> follow = follow_masks(modules);
  SequenceSearch search{n, modules, follow, emit, {}};
  search.picked.reserve(static_cast<std::size_t>(n));
  const std::uint64_t everything =
      modules.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << modules.size()) - 1;
  search.extend(everything);
}

std::vector<ExceptionalSequence> enumerate_complete_sequences(int n, int jobs) {
  checked_rank(n);
  if (jobs <= 1) {
    std::vector<ExceptionalSequence> all;
    for_each_complete_sequence(n, [&](const ExceptionalSequence& seq) { all.push_back(seq); });
    return all;
  }

  const std::vector<Interval> modules = indecomposables(n);
  if (modules.size() > 64) throw std::invalid_argument("sequence enumeration supports n <= 10");
  const std::vector<std::uint64_t> follow = follow_masks(modules);
  const std::uint64_t everything =
      modules.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << modules.size()) - 1;

  std::vector<std::vector<ExceptionalSequence>> buckets(modules.size());
  const auto run_first = [&](std::size_t first) {
    std::vector<ExceptionalSequence>& local = buckets[first];
    const std::function<void(const ExceptionalSequence&)> emit =
        [&](const ExceptionalSequence& seq) { local.push_back(seq); };
    SequenceSearch search{n, modules, follow, emit, {}};
    search.picked.reserve(static_cast<std::size_t>(n));
    search.picked.push_back(first);
    search.extend(everything & follow[first] & ~(std::uint64_t{1} << first));
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), modules.size());
  std::vector<std::future<void>> tasks;
  tasks.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t first = w; first < buckets.size(); first += workers) run_first(first);
    }));
  }
  for (auto& task : tasks) task.get();

  std::vector<ExceptionalSequence> all;
  for (const auto& bucket : buckets) all.insert(all.end(), bucket.begin(), bucket.end());
  return all;
}

BigNat sequence_count(int n) {
  checked_rank(n);
  return BigNat::power(static_cast<std::uint64_t>(n) + 1, static_cast<unsigned>(n - 1));
}

ClassKey class_key(const ExceptionalSequence& seq) {
  if (!seq.complete()) {
    throw std::invalid_argument("class key requires a complete sequence of length " +
                                std::to_string(seq.n) + ", got " +
                                std::to_string(seq.objects.size()));
  }
  if (const auto bad = first_failing_pair(seq)) {
    throw std::invalid_argument("not an exceptional sequence: pair (" +
                                seq.objects[static_cast<std::size_t>(bad->first)].to_string() +
                                ", " +
                                seq.objects[static_cast<std::size_t>(bad->second)].to_string() +
                                ") fails");
  }
  ClassKey key;
  key.reserve(seq.objects.size());
  for (const ShiftedObject& obj : seq.objects) key.push_back(obj.module);
  std::sort(key.begin(), key.end());
  return key;
}

std::string to_string(const ClassKey& key) {
  std::string out = "{";
  for (std::size_t k = 0; k < key.size(); ++k) {
    if (k > 0) out += ",";
    out += key[k].to_string();
  }
  return out + "}";
}

}  // namespace excseq
