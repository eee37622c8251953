#pragma once

#include "excseq/interval.hpp"

namespace excseq {

// Independent cross-checks for the closed-form Hom/Ext dimensions.  These
// never consult homext.hpp.

// Dimension of the space of representation morphisms X -> Y: one scalar
// unknown per vertex lying in both supports, one commutation equation per
// arrow v+1 -> v, solved by exact rational elimination (no floating point).
int hom_dim_oracle(const Interval& x, const Interval& y);

// <d, e> = sum_v d_v e_v - sum_{v=1}^{n-1} d_{v+1} e_v.  Over a hereditary
// algebra this equals dim Hom - dim Ext^1, which turns the Hom oracle into
// an Ext oracle.
long long euler_form(const DimVector& d, const DimVector& e);

// hom_dim_oracle(x, y) - euler_form(dim x, dim y); always 0 or 1 here.
int ext_dim_oracle(const Interval& x, const Interval& y);

}  // namespace excseq
