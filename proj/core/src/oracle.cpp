#include "excseq/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace excseq {
namespace {

// Exact rational scalar for the elimination.  Coefficients start in
// {-1, 0, 1} and stay tiny, but the arithmetic is kept exact on principle.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long value) { return {value, 1}; }

  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  bool is_zero() const { return num == 0; }
};

Rational operator*(const Rational& a, const Rational& b) {
  Rational r{a.num * b.num, a.den * b.den};
  r.reduce();
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r{a.num * b.den - b.num * a.den, a.den * b.den};
  r.reduce();
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  Rational r{a.num * b.den, a.den * b.num};
  r.reduce();
  return r;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[r][c] = rows[r][c] - factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int hom_dim_oracle(const Interval& x, const Interval& y) {
  require_same_rank(x, y);
  const int n = x.n;

  // Unknowns: phi_v for vertices v carried by both modules.
  std::vector<int> column(static_cast<std::size_t>(n) + 1, -1);
  int unknowns = 0;
  for (int v = 1; v <= n; ++v)
    if (x.supports(v) && y.supports(v)) column[static_cast<std::size_t>(v)] = unknowns++;

  // One equation per arrow v+1 -> v, as maps X_{v+1} -> Y_v:
  //   phi_v . (X structure map)  =  (Y structure map) . phi_{v+1}.
  // Both sides can be nonzero only when X carries v+1 and Y carries v.
  std::vector<std::vector<Rational>> rows;
  for (int v = 1; v < n; ++v) {
    if (!x.supports(v + 1) || !y.supports(v)) continue;
    std::vector<Rational> row(static_cast<std::size_t>(unknowns));
    bool nontrivial = false;
    if (x.supports(v)) {  // X map v+1 -> v is the identity, LHS = phi_v
      row[static_cast<std::size_t>(column[static_cast<std::size_t>(v)])] = Rational::of(1);
      nontrivial = true;
    }
    if (y.supports(v + 1)) {  // Y map v+1 -> v is the identity, RHS = phi_{v+1}
      const auto c = static_cast<std::size_t>(column[static_cast<std::size_t>(v + 1)]);
      row[c] = row[c] - Rational::of(1);
      nontrivial = nontrivial || !row[c].is_zero();
    }
    if (nontrivial) rows.push_back(std::move(row));
  }

  const std::size_t rank = rational_rank(std::move(rows), static_cast<std::size_t>(unknowns));
  return unknowns - static_cast<int>(rank);
}

long long euler_form(const DimVector& d, const DimVector& e) {
  if (d.size() != e.size())
    throw std::invalid_argument("euler_form: dimension vectors of different length");
  long long total = 0;
  for (std::size_t v = 0; v < d.size(); ++v) total += static_cast<long long>(d[v]) * e[v];
  for (std::size_t v = 0; v + 1 < d.size(); ++v)
    total -= static_cast<long long>(d[v + 1]) * e[v];
  return total;
}

int ext_dim_oracle(const Interval& x, const Interval& y) {
  const long long ext = hom_dim_oracle(x, y) - euler_form(dim_vector(x), dim_vector(y));
  if (ext < 0) throw std::logic_error("ext oracle produced a negative dimension");
  return static_cast<int>(ext);
}

}  // namespace excseq
