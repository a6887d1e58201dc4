#pragma once

#include "qmhs/ids.hpp"
#include "qmhs/rational.hpp"

namespace qmhs {

// Binomial coefficient with the everywhere-defined convention: zero whenever
// a < 0, b < 0, or b > a.  The closed forms below lean on those zeros to
// switch terms off at the edges of their domains.
Rational binomial(long a, long b);

// z(n; 1^m) = C(n-1, m) / (m+1).
Rational cf_all_ones(int n, int m);

// p_s(n) as a Hessenberg determinant in the binomials C(n-1, k), expanded by
// its last row.  Independent of the summation route, so it cross-checks
// power_sum.  Requires s >= 1.
Rational cf_depth1_det(int n, int s);

// z(n; (-b)^l) for b = 1, 2:
//   b = 1: C(n, l)
//   b = 2: C(n, l) + 2 (-1)^(n-l-1) C(n, 2n-2l)
Rational cf_negative(int n, int l, int b);

// z(n; 2, 1^m) = -m! (n-2m-3) / (m+2)! * C(n-1, m).
Rational cf_asym_pair(int n, int m);

// C(m, r) (C(n-1, m) + (-1)^r C(n-1, m+r+1)) / ((r+1) n), defined for
// 0 <= r <= m.  Equals y(n; {2^r, 1^(m-r)}) when 1 <= m <= n-1; at m = 0 the
// formula gives 1 while the empty symmetrized sum is 0 by convention.
Rational cf_y_two_one(int n, int m, int r);

// Exact right-hand side of a registered identity.  Identities checked as a
// difference against zero (the product expansions and the conjugation rule)
// have right-hand side 0 here.  Parameter validation is the verifier's job;
// this only requires the named parameters to be present.
Rational rhs_value(IdentityId id, const ParamTuple& params);

}  // namespace qmhs
