// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>

#include "igm/types.hpp"

namespace igm {

/// Stagewise codes of `pi` relative to `sigma`:
///   s_j = sigma(pi_j) - 1 - #{ j' < j : sigma(pi_j') < sigma(pi_j) }
/// i.e. 1 + s_j is the rank of the j-th observed item among the items of
/// sigma not used by earlier ranks. The tail rule makes sigma total, so the
/// codes exist for any observation.
CodeVector codes_of(const TopTOrdering& pi, const CentralOrdering& sigma);

/// Inverse of codes_of: the j-th item is the (1 + s_j)-th not-yet-chosen item
/// of sigma. Entries must be >= 0; the tail supplies unboundedly many items.
TopTOrdering ordering_from_codes(const CodeVector& s, const CentralOrdering& sigma);

/// Weighted code distance d_theta(pi, sigma) = sum_j theta_j s_j.
/// With constant theta this is theta times the Kendall distance.
double d_theta(const TopTOrdering& pi, const CentralOrdering& sigma,
               const ThetaVector& theta);

/// Extended Kendall distance between two top-t orderings with possibly
/// different item sets: the Hausdorff distance between the sets of linear
/// extensions of the two lists on the union of their items, where each list
/// places its unlisted union items strictly below its listed ones, mutually
/// unordered. Closed form:
///   F + C(max(|b \ a|, |a \ b|), 2)
/// with F the number of item pairs ordered by both lists in opposite order.
std::int64_t kendall_topt(const TopTOrdering& a, const TopTOrdering& b);

}  // namespace igm
