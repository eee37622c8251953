#include "excseq/chord.hpp"

#include <stdexcept>
#include <utility>

namespace excseq {

Chord::Chord(int n_, int a, int b) : n(n_) {
  checked_rank(n);
  if (a > b) std::swap(a, b);
  p = a;
  q = b;
  if (!(0 <= p && p < q && q <= n)) {
    throw std::invalid_argument("chord endpoints must be distinct points in 0..n, got (" +
                                std::to_string(a) + "," + std::to_string(b) + ") with n=" +
                                std::to_string(n));
  }
}

void require_same_rank(const Chord& c, const Chord& d) {
  if (c.n != d.n) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(c.n) + " vs " +
                                std::to_string(d.n));
  }
}

int Chord::other_endpoint(int v) const {
  if (v == p) return q;
  if (v == q) return p;
  throw std::invalid_argument(to_string() + " has no endpoint " + std::to_string(v));
}

std::string Chord::to_string() const {
  return "c(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<Chord> all_chords(int n) {
  checked_rank(n);
  std::vector<Chord> chords;
  chords.reserve(static_cast<std::size_t>(n + 1) * n / 2);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q <= n; ++q) chords.emplace_back(n, p, q);
  return chords;
}

int distance(int i, int j, int n) {
  checked_rank(n);
  if (i < 0 || i > n || j < 0 || j > n)
    throw std::invalid_argument("point out of range 0..n in distance()");
  return j >= i ? j - i : j + n + 1 - i;
}

MeetType meet_type(const Chord& c, const Chord& d) {
  require_same_rank(c, d);
  if (c == d) throw std::invalid_argument("meet_type requires distinct chords");

  if (c.has_endpoint(d.p)) return {MeetType::Kind::SharedEndpoint, d.p};
  if (c.has_endpoint(d.q)) return {MeetType::Kind::SharedEndpoint, d.q};

  const bool p_inside = c.p < d.p && d.p < c.q;
  const bool q_inside = c.p < d.q && d.q < c.q;
  if (p_inside != q_inside) return {MeetType::Kind::InteriorCross, -1};
  return {MeetType::Kind::Disjoint, -1};
}

}  // namespace excseq
