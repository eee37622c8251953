#pragma once

#include <compare>
#include <string>
#include <vector>

#include "excseq/interval.hpp"

namespace excseq {

// Chord between two of the n+1 points labeled 0..n counterclockwise on a
// circle.  Endpoints are normalized to p < q; c(p,q) and c(q,p) are the
// same chord.
struct Chord {
  int n = 1;
  int p = 0;
  int q = 1;

  Chord() = default;
  Chord(int n, int a, int b);  // normalizes; throws on out-of-range or equal points

  friend auto operator<=>(const Chord&, const Chord&) = default;

  bool has_endpoint(int v) const { return v == p || v == q; }
  int other_endpoint(int v) const;  // requires has_endpoint(v)
  std::string to_string() const;    // "c(p,q)"
};

void require_same_rank(const Chord& c, const Chord& d);

// All (n+1)n/2 chords, ordered lexicographically by (p, q).
std::vector<Chord> all_chords(int n);

// Counterclockwise step count from point i to point j:
// j - i when j >= i, else j + n + 1 - i.  Always in [0, n].
int distance(int i, int j, int n);

struct MeetType {
  enum class Kind { Disjoint, InteriorCross, SharedEndpoint };
  Kind kind = Kind::Disjoint;
  int shared_point = -1;  // set only for SharedEndpoint

  friend bool operator==(const MeetType&, const MeetType&) = default;
};

// Classification of how two distinct chords meet.  Crossing is decided
// purely on the cyclic order: with c = c(a,b) normalized a < b, the chords
// cross in the open disk iff exactly one endpoint of the other chord lies
// strictly between a and b.  Two distinct chords share at most one point.
MeetType meet_type(const Chord& c, const Chord& d);

}  // namespace excseq
