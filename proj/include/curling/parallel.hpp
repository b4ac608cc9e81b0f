#pragma once

#include <cstddef>
#include <functional>

namespace curling {

/// 0 means "one worker per hardware thread".
unsigned resolve_threads(unsigned requested) noexcept;

/// Calls body(shard) for every shard in [0, shards) using up to `threads`
/// workers. Shards are claimed dynamically; callers merge per-shard results
/// themselves, so completion order never affects the outcome. The first
/// exception thrown by any shard is rethrown after all workers stop.
void for_each_shard(std::size_t shards, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace curling
