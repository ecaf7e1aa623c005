#pragma once

#include "braidforms/hecke.hpp"

namespace braidforms {

// Ocneanu trace Tr: H_n(z) -> Z[z,T], the Z[z]-linear functional with
// Tr(1) = 1 and the Markov property Tr(x sigma_{n-1} y) = T Tr(x y) for
// x, y in H_{n-1}. Evaluated by the coset recursion on basis elements:
// if pi fixes n, restrict; otherwise peel omega_pi = omega_rho *
// sigma_{n-1}...sigma_j (j = pi(n), lengths additive) and apply Markov.
LaurentPoly2 ocneanu_trace(const HeckeElement& h);

// Memoized trace of a single basis element; thread-safe idempotent cache.
LaurentPoly2 trace_of_basis(const Permutation& pi);

// Precomputes every basis trace for S_1..S_n so later lookups are hits;
// call before fanning work out across threads.
void warm_trace_table(int n);

// Framed Homfly from a trace Sum_k T^k f_k(z):
//   H = Sum_k v^{1-n} (1-v^2)^{n-1-k} z^{k-n+1} f_k(z),
// the polynomial form of substituting T = z/(1-v^2) and normalizing by
// ((v^{-1}-v)/z)^{n-1}. Verifies the v-window [1-n, n-1] and the v-parity
// n-1 (mod 2) on every value it produces.
LaurentPoly2 framed_from_trace(const LaurentPoly2& trace, int n);

LaurentPoly2 framed_homfly(const BraidWord& w);

// Oriented Homfly of the closure: P = v^writhe * H.
LaurentPoly2 homfly_P(const BraidWord& w);

enum class ColumnSide { Lower, Upper };

// Extremal MFW columns, both in Z[z]:
//   lower: z^{n-1}  * coeff of v^{1-n} in H
//   upper: (-z)^{n-1} * coeff of v^{n-1} in H
LaurentPoly2 extremal_column_of_framed(const LaurentPoly2& framed, int n, ColumnSide side);
LaurentPoly2 extremal_column(const BraidWord& w, ColumnSide side);

// True iff every v-exponent lies in [1-n, n-1].
bool mfw_window_check(const LaurentPoly2& framed, int n);

}  // namespace braidforms
