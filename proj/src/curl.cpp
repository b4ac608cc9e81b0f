#include "curling/curl.hpp"

#include "curling/error.hpp"

#include <algorithm>

namespace curling {

std::size_t periodic_suffix_length(SeqView s, std::size_t period) noexcept {
  const std::size_t n = s.size();
  if (period >= n) return n;
  std::size_t i = n - period;
  while (i > 0 && s[i - 1] == s[i - 1 + period]) --i;
  return n - i;
}

CurlResult curling_number(SeqView s) {
  const std::size_t n = s.size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "curling number of the empty sequence");
  std::size_t best_k = 1;
  std::size_t best_pi = 1;
  // A longer block can only win if it fits best_k + 1 times.
  for (std::size_t len = 1; (best_k + 1) * len <= n; ++len) {
    const std::size_t reps = periodic_suffix_length(s, len) / len;
    if (reps > best_k) {
      best_k = reps;
      best_pi = len;
    }
  }
  return {static_cast<int>(best_k), static_cast<int>(best_pi), static_cast<int>(n - best_k * best_pi)};
}

ExtensionResult extend_to_tail(SeqView s0, std::size_t step_limit) {
  if (s0.empty()) throw Error(ErrorCode::EmptyInput, "extend_to_tail needs a nonempty start");
  ExtensionResult out;
  out.extension.assign(s0.begin(), s0.end());
  for (;;) {
    const int k = curling_number(out.extension).k;
    if (k == 1) return out;
    if (out.tau == step_limit) throw StepLimitExceeded(IntSeq(s0.begin(), s0.end()), step_limit);
    out.extension.push_back(k);
    ++out.tau;
  }
}

IntSeq gijswijt_prefix(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "gijswijt_prefix needs n >= 1");
  IntSeq g{1};
  g.reserve(n);
  while (g.size() < n) g.push_back(curling_number(g).k);
  return g;
}

bool is_weak(SeqView s0, std::size_t step_limit) {
  if (s0.empty()) throw Error(ErrorCode::EmptyInput, "is_weak needs a nonempty start");
  if (s0.size() == 1) throw Error(ErrorCode::LengthOne, "weakness is defined for length >= 2");
  IntSeq s(s0.begin(), s0.end());
  for (std::size_t step = 0;; ++step) {
    const int k = curling_number(s).k;
    if (k == 1) return true;
    if (curling_number(SeqView(s).subspan(1)).k != k) return false;
    if (step == step_limit) throw StepLimitExceeded(IntSeq(s0.begin(), s0.end()), step_limit);
    s.push_back(k);
  }
}

bool check_merge(SeqView s0, std::size_t horizon, std::size_t step_limit) {
  if (s0.empty()) throw Error(ErrorCode::EmptyInput, "check_merge needs a nonempty start");
  if (std::find(s0.begin(), s0.end(), 1) != s0.end()) {
    throw Error(ErrorCode::ContainsOne, "merge check only applies to starts without a 1");
  }
  if (horizon == 0) return true;
  IntSeq s = extend_to_tail(s0, step_limit).extension;
  const IntSeq g = gijswijt_prefix(horizon);
  for (std::size_t h = 0; h < horizon; ++h) {
    const int k = curling_number(s).k;
    if (k != g[h]) return false;
    s.push_back(k);
  }
  return true;
}

}  // namespace curling
