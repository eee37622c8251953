#include "excseq/mutation.hpp"

#include <cctype>
#include <deque>
#include <stdexcept>

namespace excseq {
namespace {

struct SharedLabels {
  int shared;   // i: the common endpoint
  int e_other;  // j: the other endpoint of the mover's chord
  int f_other;  // l: the other endpoint of the target's chord
};

MutationCase classify(const SharedLabels& p) {
  if (p.shared < p.e_other && p.e_other < p.f_other) return MutationCase::Cokernel;
  if (p.e_other < p.f_other && p.f_other < p.shared) return MutationCase::Kernel;
  if (p.f_other < p.shared && p.shared < p.e_other) return MutationCase::Extension;
  // The remaining three orderings all force a nonzero Hom or Ext against
  // the pair condition.
  throw std::logic_error("chord configuration impossible for an exceptional pair");
}

void require_pair(const ShiftedObject& e, const ShiftedObject& f) {
  require_same_rank(e.module, f.module);
  if (e.module == f.module || !is_exceptional_pair(e.module, f.module)) {
    throw std::invalid_argument("(" + e.to_string() + ", " + f.to_string() +
                                ") is not an exceptional pair");
  }
}

std::optional<SharedLabels> shared_labels(const Interval& e, const Interval& f) {
  const MeetType meet = meet_type(phi(e), phi(f));
  if (meet.kind == MeetType::Kind::Disjoint) return std::nullopt;
  if (meet.kind == MeetType::Kind::InteriorCross)
    throw std::logic_error("exceptional pair with interior-crossing chords");
  const int i = meet.shared_point;
  return SharedLabels{i, phi(e).other_endpoint(i), phi(f).other_endpoint(i)};
}

}  // namespace

std::string to_string(MutationCase tag) {
  switch (tag) {
    case MutationCase::Disjoint: return "disjoint";
    case MutationCase::Cokernel: return "cokernel";
    case MutationCase::Kernel: return "kernel";
    case MutationCase::Extension: return "extension";
  }
  return "?";
}

Chord chord_mutate(Direction, const Chord& by, const Chord& of) {
  // Left and right produce the same chord; the direction only matters for
  // the object-level shift, which chords forget.
  require_same_rank(by, of);
  const MeetType meet = meet_type(by, of);
  switch (meet.kind) {
    case MeetType::Kind::InteriorCross:
      throw std::invalid_argument(by.to_string() + " and " + of.to_string() +
                                  " cross in the interior; no exceptional order exists");
    case MeetType::Kind::Disjoint:
      return of;
    case MeetType::Kind::SharedEndpoint:
      return Chord(by.n, by.other_endpoint(meet.shared_point),
                   of.other_endpoint(meet.shared_point));
  }
  throw std::logic_error("unreachable");
}

MutationResult mutate_left(const ShiftedObject& e, const ShiftedObject& f) {
  require_pair(e, f);
  const auto labels = shared_labels(e.module, f.module);
  if (!labels) return {f, MutationCase::Disjoint};
  const int n = e.module.n;
  const int j = labels->e_other;
  const int l = labels->f_other;
  switch (classify(*labels)) {
    case MutationCase::Cokernel:
      return {{Interval(n, j, l), f.shift}, MutationCase::Cokernel};
    case MutationCase::Kernel:
      return {{Interval(n, j, l), f.shift + 1}, MutationCase::Kernel};
    case MutationCase::Extension:
      return {{Interval(n, l, j), f.shift}, MutationCase::Extension};
    case MutationCase::Disjoint:
      break;
  }
  throw std::logic_error("unreachable");
}

MutationResult mutate_right(const ShiftedObject& f, const ShiftedObject& e) {
  require_pair(e, f);
  const auto labels = shared_labels(e.module, f.module);
  if (!labels) return {e, MutationCase::Disjoint};
  const int n = e.module.n;
  const int j = labels->e_other;
  const int l = labels->f_other;
  switch (classify(*labels)) {
    case MutationCase::Cokernel:
      return {{Interval(n, j, l), e.shift - 1}, MutationCase::Cokernel};
    case MutationCase::Kernel:
      return {{Interval(n, j, l), e.shift}, MutationCase::Kernel};
    case MutationCase::Extension:
      return {{Interval(n, l, j), e.shift}, MutationCase::Extension};
    case MutationCase::Disjoint:
      break;
  }
  throw std::logic_error("unreachable");
}

std::string BraidLetter::to_string() const {
  switch (kind) {
    case Kind::Braid: return "s" + std::to_string(index);
    case Kind::BraidInv: return "s" + std::to_string(index) + "'";
    case Kind::Shift: return "t" + std::to_string(index);
    case Kind::ShiftInv: return "t" + std::to_string(index) + "'";
  }
  return "?";
}

std::string to_string(const BraidWord& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0) out += " ";
    out += word[k].to_string();
  }
  return out;
}

BraidWord parse_braid_word(std::string_view text, int n) {
  checked_rank(n);
  BraidWord word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view token = text.substr(start, pos - start);

    const char head = token[0];
    if (head != 's' && head != 't')
      throw std::invalid_argument("bad braid letter '" + std::string(token) +
                                  "': expected sK, sK', tK or tK'");
    bool inverse = false;
    std::string_view digits = token.substr(1);
    if (!digits.empty() && digits.back() == '\'') {
      inverse = true;
      digits.remove_suffix(1);
    }
    if (digits.empty()) throw std::invalid_argument("bad braid letter '" + std::string(token) + "'");
    int index = 0;
    for (const char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("bad braid letter '" + std::string(token) + "'");
      index = index * 10 + (ch - '0');
    }
    const int limit = head == 's' ? n - 1 : n;
    if (index < 1 || index > limit) {
      throw std::invalid_argument("letter '" + std::string(token) + "' out of range: index must be in 1.." +
                                  std::to_string(limit) + " for n=" + std::to_string(n));
    }
    const BraidLetter::Kind kind =
        head == 's' ? (inverse ? BraidLetter::Kind::BraidInv : BraidLetter::Kind::Braid)
                    : (inverse ? BraidLetter::Kind::ShiftInv : BraidLetter::Kind::Shift);
    word.push_back({kind, index});
  }
  return word;
}

ExceptionalSequence braid_apply_letter(const BraidLetter& letter, const ExceptionalSequence& seq,
                                       MutationCase* tag) {
  const int n = seq.n;
  if (!seq.complete())
    throw std::invalid_argument("braid letters act on complete sequences of length " +
                                std::to_string(n));
  const int limit = (letter.kind == BraidLetter::Kind::Braid ||
                     letter.kind == BraidLetter::Kind::BraidInv)
                        ? n - 1
                        : n;
  if (letter.index < 1 || letter.index > limit)
    throw std::invalid_argument("letter " + letter.to_string() + " out of range for n=" +
                                std::to_string(n));

  ExceptionalSequence out = seq;
  const auto k = static_cast<std::size_t>(letter.index - 1);
  if (tag) *tag = MutationCase::Disjoint;
  switch (letter.kind) {
    case BraidLetter::Kind::Braid: {
      const MutationResult res = mutate_left(seq.objects[k], seq.objects[k + 1]);
      out.objects[k] = res.object;
      out.objects[k + 1] = seq.objects[k];
      if (tag) *tag = res.tag;
      break;
    }
    case BraidLetter::Kind::BraidInv: {
      const MutationResult res = mutate_right(seq.objects[k + 1], seq.objects[k]);
      out.objects[k] = seq.objects[k + 1];
      out.objects[k + 1] = res.object;
      if (tag) *tag = res.tag;
      break;
    }
    case BraidLetter::Kind::Shift:
      out.objects[k].shift += 1;
      break;
    case BraidLetter::Kind::ShiftInv:
      out.objects[k].shift -= 1;
      break;
  }
  return out;
}

ExceptionalSequence braid_apply(const BraidWord& word, const ExceptionalSequence& seq) {
  if (const auto bad = first_failing_pair(seq)) {
    throw std::invalid_argument(
        "not an exceptional sequence: pair (" +
        seq.objects[static_cast<std::size_t>(bad->first)].to_string() + ", " +
        seq.objects[static_cast<std::size_t>(bad->second)].to_string() + ") fails");
  }
  ExceptionalSequence current = seq;
  for (const BraidLetter& letter : word) current = braid_apply_letter(letter, current);
  return current;
}

int rotate_point(int p, int n) {
  if (p < 0 || p > n) throw std::invalid_argument("point out of range 0..n in rotate_point()");
  return (p + n) % (n + 1);
}

Chord rotate(const Chord& c) { return Chord(c.n, rotate_point(c.p, c.n), rotate_point(c.q, c.n)); }

Interval rotate(const Interval& x) {
  if (x.i != 0) return Interval(x.n, x.i - 1, x.j - 1);
  return Interval(x.n, x.j - 1, x.n);
}

ExceptionalSequence rotate(const ExceptionalSequence& seq) {
  ExceptionalSequence out = seq;
  for (ShiftedObject& obj : out.objects) obj.module = rotate(obj.module);
  return out;
}

std::vector<BraidLetter> braid_generators(int n) {
  checked_rank(n);
  std::vector<BraidLetter> letters;
  for (int k = 1; k <= n - 1; ++k) {
    letters.push_back({BraidLetter::Kind::Braid, k});
    letters.push_back({BraidLetter::Kind::BraidInv, k});
  }
  return letters;
}

std::set<ClassKey> orbit_classes(const ExceptionalSequence& start,
                                 const std::vector<BraidLetter>& generators) {
  std::set<ClassKey> visited{class_key(start)};  // validates start
  std::deque<ExceptionalSequence> queue{start};
  while (!queue.empty()) {
    const ExceptionalSequence current = std::move(queue.front());
    queue.pop_front();
    for (const BraidLetter& letter : generators) {
      ExceptionalSequence next = braid_apply_letter(letter, current);
      ClassKey key = class_key(next);
      if (visited.insert(std::move(key)).second) queue.push_back(std::move(next));
    }
  }
  return visited;
}

}  // namespace excseq
