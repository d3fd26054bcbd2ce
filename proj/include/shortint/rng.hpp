#pragma once

#include "shortint/budget.hpp"

namespace shortint {

// splitmix64: tiny counter-based generator. Sampling tasks are seeded by
// (global seed, task key) so the worker schedule cannot affect results.
inline u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct SplitMix64 {
  u64 state;
  explicit SplitMix64(u64 seed) : state(seed) {}
  SplitMix64(u64 seed, u64 task_key) : state(splitmix64(seed) ^ splitmix64(task_key)) {}
  u64 next() { return state = splitmix64(state); }
  u64 below(u64 n) { return next() % n; }
};

}  // namespace shortint
