#pragma once

#include "curling/types.hpp"

#include <cstddef>

namespace curling {

/// Curling number of s: the largest k with s = X Y^k, together with the length
/// of the shortest Y achieving it. Straight O(n^2) scan; this is the reference
/// every faster path is checked against.
CurlResult curling_number(SeqView s);

/// Length of the longest suffix of s that has period `period`
/// (at least min(period, |s|)).
std::size_t periodic_suffix_length(SeqView s, std::size_t period) noexcept;

/// Appends curling numbers until the curling number is 1.
/// Throws StepLimitExceeded if that takes more than `step_limit` appends.
ExtensionResult extend_to_tail(SeqView s0, std::size_t step_limit = kDefaultStepLimit);

/// First n terms of Gijswijt's sequence (seed 1, then append curling numbers).
IntSeq gijswijt_prefix(std::size_t n);

/// True iff the first element of s0 is never needed: at every extension step
/// the curling number is unchanged when s0's first element is dropped.
bool is_weak(SeqView s0, std::size_t step_limit = kDefaultStepLimit);

/// Extends s0 past its extension by `horizon` terms and checks they equal the
/// first `horizon` terms of Gijswijt's sequence. s0 must not contain a 1.
bool check_merge(SeqView s0, std::size_t horizon, std::size_t step_limit = kDefaultStepLimit);

}  // namespace curling
