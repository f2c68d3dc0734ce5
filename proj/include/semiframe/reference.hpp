#pragma once

#include "semiframe/operator_spec.hpp"
#include "semiframe/sequence.hpp"

namespace semiframe {

// Stock constructions used across the built-in checks, the demo scenarios
// and the tests. Kept in one place so every consumer agrees on the exact
// weights and index maps.

// The orthonormal coordinate family {e_n}.
[[nodiscard]] SequenceFamily ref_orthonormal();

// The weighted family {n e_n}, complete with vanishing upper bound behaviour
// under inversion and the standard example of a lower semi-frame that is not
// a frame.
[[nodiscard]] SequenceFamily ref_weighted_index();

// {(1/n) e_n}, Bessel but not lower semi-frame.
[[nodiscard]] SequenceFamily ref_reciprocal();

// {2n e_2n}: the even coordinates, declared on the even subspace.
[[nodiscard]] SequenceFamily ref_even_embedded();

// {(2n-1) e_(2n-1)}: the odd coordinates, declared on the odd subspace.
[[nodiscard]] SequenceFamily ref_odd_embedded();

// diag(1/n), bounded, injective, dense range that is not closed.
[[nodiscard]] OperatorSpec ref_reciprocal_diagonal();

// diag(2 + 1/n): bounded below by 2, so the identity-plus machinery has
// slack one.
[[nodiscard]] OperatorSpec ref_two_plus_diagonal();

// x -> (x_1 + x_2, 0, x_3, x_4, ...): collapses the first two coordinates
// onto one line. Rank deficient by exactly one at every level.
[[nodiscard]] OperatorSpec pair_collapse_operator();

}  // namespace semiframe
