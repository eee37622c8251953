#pragma once

#include <compare>
#include <string>
#include <vector>

namespace excseq {

// Indecomposable module over the path algebra of the linearly oriented
// quiver 1 <- 2 <- ... <- n: the ground field sits at vertices i+1..j with
// identity maps inside the support and zero elsewhere.  Valid indices
// satisfy 0 <= i < j <= n; the rank n is the only quiver parameter.
struct Interval {
  int n = 1;
  int i = 0;
  int j = 1;

  Interval() = default;
  Interval(int n, int i, int j);  // throws std::invalid_argument on bad indices

  // Equality and order are on the (n, i, j) triple; within one rank this is
  // the lexicographic (i, j) order used by every enumeration.
  friend auto operator<=>(const Interval&, const Interval&) = default;

  bool supports(int vertex) const { return i < vertex && vertex <= j; }
  std::string to_string() const;  // "X(i,j)"
};

// n >= 1, else std::invalid_argument.
int checked_rank(int n);

// Throws std::invalid_argument when x and y live over different ranks.
void require_same_rank(const Interval& x, const Interval& y);

// All n(n+1)/2 indecomposables, ordered lexicographically by (i, j).
std::vector<Interval> indecomposables(int n);

// Dimensions at vertices 1..n; for an interval: 1 on the support, else 0.
using DimVector = std::vector<int>;

DimVector dim_vector(const Interval& x);

// Indecomposable object of the bounded derived category: a module placed in
// degree `shift`.  Every indecomposable object has a unique such form.
struct ShiftedObject {
  Interval module;
  int shift = 0;

  ShiftedObject() = default;
  ShiftedObject(Interval m, int s = 0) : module(m), shift(s) {}

  friend auto operator<=>(const ShiftedObject&, const ShiftedObject&) = default;
  std::string to_string() const;  // "X(i,j)", or "S^l X(i,j)" when l != 0
};

// The four Hom/Ext support regions attached to a module X:
//   HomOut = { Y : Hom(X, Y) != 0 }    HomIn = { Y : Hom(Y, X) != 0 }
//   ExtOut = { Y : Ext^1(X, Y) != 0 }  ExtIn = { Y : Ext^1(Y, X) != 0 }
enum class RegionKind { HomOut, HomIn, ExtOut, ExtIn };

}  // namespace excseq
