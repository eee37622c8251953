#pragma once

#include <map>
#include <vector>

#include "excseq/interval.hpp"

namespace excseq {

// Hom and Ext^1 dimensions between indecomposables, by the closed forms for
// the linear orientation.  Every nonzero space is one dimensional, so the
// four regions below are rectangles in (i, j) coordinates:
//
//   Hom(X_{i,j},   X_{s,t}) != 0  iff  i <= s <= j-1  and  j <= t <= n
//   Ext^1(X_{i,j}, X_{s,t}) != 0  iff  0 <= s <= i-1  and  i <= t <= j-1
//
// Empty index ranges give empty regions; in particular projectives (i = 0)
// have an empty ExtOut and injectives (j = n) an empty ExtIn.

int hom_dim(const Interval& x, const Interval& y);
int ext_dim(const Interval& x, const Interval& y);

std::vector<Interval> hom_region(const Interval& x, RegionKind kind);

// Degrees l with Hom(S^l A, B) != 0, mapped to that dimension.  A module
// pair concentrates in degree 0 (Hom) or -1 (Ext^1), never both, so the
// result has at most one entry and the total dimension is at most 1.
std::map<int, int> derived_hom_degrees(const ShiftedObject& a, const ShiftedObject& b);

}  // namespace excseq
