#include "excseq/interval.hpp"

#include <stdexcept>

namespace excseq {

int checked_rank(int n) {
  if (n < 1) throw std::invalid_argument("quiver rank must be at least 1, got " + std::to_string(n));
  return n;
}

Interval::Interval(int n_, int i_, int j_) : n(n_), i(i_), j(j_) {
  checked_rank(n);
  if (!(0 <= i && i < j && j <= n)) {
    throw std::invalid_argument("interval indices must satisfy 0 <= i < j <= n, got (i=" +
                                std::to_string(i) + ", j=" + std::to_string(j) +
                                ", n=" + std::to_string(n) + ")");
  }
}

void require_same_rank(const Interval& x, const Interval& y) {
  if (x.n != y.n) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(x.n) + " vs " +
                                std::to_string(y.n));
  }
}

std::string Interval::to_string() const {
  return "X(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<Interval> indecomposables(int n) {
  checked_rank(n);
  std::vector<Interval> all;
  all.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) all.emplace_back(n, i, j);
  return all;
}

DimVector dim_vector(const Interval& x) {
  DimVector dims(static_cast<std::size_t>(x.n), 0);
  for (int v = x.i + 1; v <= x.j; ++v) dims[static_cast<std::size_t>(v - 1)] = 1;
  return dims;
}

std::string ShiftedObject::to_string() const {
  if (shift == 0) return module.to_string();
  return "S^" + std::to_string(shift) + " " + module.to_string();
}

}  // namespace excseq
