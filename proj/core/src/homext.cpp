#include "excseq/homext.hpp"

namespace excseq {

int hom_dim(const Interval& x, const Interval& y) {
  require_same_rank(x, y);
  return (x.i <= y.i && y.i <= x.j - 1 && x.j <= y.j) ? 1 : 0;
}

int ext_dim(const Interval& x, const Interval& y) {
  require_same_rank(x, y);
  return (y.i <= x.i - 1 && x.i <= y.j && y.j <= x.j - 1) ? 1 : 0;
}

std::vector<Interval> hom_region(const Interval& x, RegionKind kind) {
  int s_lo = 0, s_hi = -1, t_lo = 0, t_hi = -1;
  switch (kind) {
    case RegionKind::HomOut:  s_lo = x.i;     s_hi = x.j - 1; t_lo = x.j;     t_hi = x.n;     break;
    case RegionKind::HomIn:   s_lo = 0;       s_hi = x.i;     t_lo = x.i + 1; t_hi = x.j;     break;
    case RegionKind::ExtOut:  s_lo = 0;       s_hi = x.i - 1; t_lo = x.i;     t_hi = x.j - 1; break;
    case RegionKind::ExtIn:   s_lo = x.i + 1; s_hi = x.j;     t_lo = x.j + 1; t_hi = x.n;     break;
  }
  std::vector<Interval> region;
  for (int s = s_lo; s <= s_hi; ++s)
    for (int t = std::max(t_lo, s + 1); t <= t_hi; ++t) region.emplace_back(x.n, s, t);
  return region;
}

std::map<int, int> derived_hom_degrees(const ShiftedObject& a, const ShiftedObject& b) {
  const Interval& x = a.module;
  const Interval& y = b.module;
  require_same_rank(x, y);
  std::map<int, int> degrees;
  // Hom(S^l A, B) = Hom(S^{l + a.shift - b.shift} X, Y); the inner space is
  // Hom(X, Y) at offset 0 and Ext^1(X, Y) at offset -1.
  if (hom_dim(x, y) != 0) {
    degrees[b.shift - a.shift] = 1;
  } else if (ext_dim(x, y) != 0) {
    degrees[b.shift - a.shift - 1] = 1;
  }
  return degrees;
}

}  // namespace excseq
