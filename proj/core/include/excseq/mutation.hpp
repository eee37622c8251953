#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "excseq/bijection.hpp"
#include "excseq/chord.hpp"
#include "excseq/exceptional.hpp"

namespace excseq {

enum class Direction { Left, Right };

// What the defining triangle of a mutation turns out to be, for a pair of
// modules whose chords share a point.  Write the shared point i, the other
// endpoint of the mover's chord j, the other endpoint of the target's
// chord l:
//   Cokernel  (i < j < l): 0 -> E -> F -> L -> 0, the map is mono
//   Kernel    (j < l < i): 0 -> R -> E -> F -> 0, the map is epi
//   Extension (l < i < j): 0 -> F -> M -> E -> 0, Hom concentrates in
//                          degree -1 and both mutations give the middle M
// Disjoint chords leave the mutated object unchanged.
enum class MutationCase { Disjoint, Cokernel, Kernel, Extension };

std::string to_string(MutationCase tag);

struct MutationResult {
  ShiftedObject object;
  MutationCase tag = MutationCase::Disjoint;
};

// Chord-level mutation: L_by(of) for Left, R_by(of) for Right.  Disjoint
// chords return `of` unchanged; chords sharing a point v return the third
// side, the chord between the two non-shared endpoints.  Interior-crossing
// input has no exceptional order and is rejected.
Chord chord_mutate(Direction direction, const Chord& by, const Chord& of);

// Left mutation L_E F, defined for an exceptional pair (E, F).  The shift
// rule is triangle-exact: L_{S^a X} S^b Y = S^b L_X Y, and at module level
// the case table gives
//   Cokernel  L = X(j,l) at degree 0        Kernel  L = X(j,l) at degree 1
//   Extension L = X(l,j) at degree 0
// so with d the degree where Hom(S^d X, Y) concentrates (0, 0, -1 in the
// three cases), R_Y X = S^{-(d+1)} L_X Y and the two mutations are exact
// inverses of each other inside the braid action.
MutationResult mutate_left(const ShiftedObject& e, const ShiftedObject& f);

// Right mutation R_F E for an exceptional pair (E, F):
//   Cokernel  R = X(j,l) at degree -1       Kernel  R = X(j,l) at degree 0
//   Extension R = X(l,j) at degree 0
// with R_{S^b Y} S^a X = S^a R_Y X.
MutationResult mutate_right(const ShiftedObject& f, const ShiftedObject& e);

// Generators of the braid-and-shift action on complete sequences.
struct BraidLetter {
  enum class Kind { Braid, BraidInv, Shift, ShiftInv };
  Kind kind = Kind::Braid;
  int index = 1;

  friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
  std::string to_string() const;  // "s2", "s2'", "t3", "t3'"
};

using BraidWord = std::vector<BraidLetter>;

// Compact syntax: whitespace-separated letters, sK / sK' for the braid
// generator and its inverse (1 <= K <= n-1), tK / tK' for the shift
// generator (1 <= K <= n).  Applied left to right.
BraidWord parse_braid_word(std::string_view text, int n);
std::string to_string(const BraidWord& word);

// One letter:
//   sK  : (..., E_K, E_{K+1}, ...) -> (..., L_{E_K} E_{K+1}, E_K, ...)
//   sK' : (..., E_K, E_{K+1}, ...) -> (..., E_{K+1}, R_{E_{K+1}} E_K, ...)
//   tK  : shift E_K up by one; tK' shifts it down.
// `tag` (when non-null) receives the mutation case, or Disjoint for shifts.
ExceptionalSequence braid_apply_letter(const BraidLetter& letter, const ExceptionalSequence& seq,
                                       MutationCase* tag = nullptr);

// Applies a word left to right; validates the input sequence once.
ExceptionalSequence braid_apply(const BraidWord& word, const ExceptionalSequence& seq);

// The rotation of order n+1: every point moves one step clockwise,
// k -> k-1 (mod n+1).
int rotate_point(int p, int n);
Chord rotate(const Chord& c);

// Same rotation on modules: X(i,j) -> X(i-1,j-1) for i != 0 (the
// translate), X(0,j) -> X(j-1,n) (the Nakayama image of a projective).
Interval rotate(const Interval& x);

// Elementwise on modules, shifts preserved; sends complete exceptional
// sequences to complete exceptional sequences.
ExceptionalSequence rotate(const ExceptionalSequence& seq);

// All sK and sK' letters for rank n.
std::vector<BraidLetter> braid_generators(int n);

// Breadth-first closure of the class keys reachable from `start` by the
// given letters.  Deduplicates on the class key, so it terminates even
// though the shifted-sequence orbit is infinite.
std::set<ClassKey> orbit_classes(const ExceptionalSequence& start,
                                 const std::vector<BraidLetter>& generators);

}  // namespace excseq
