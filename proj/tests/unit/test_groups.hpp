#pragma once

#include <map>
#include <mutex>
#include <string>

#include "biset/catalog.hpp"
#include "biset/group_context.hpp"

namespace biset::testing {

// Built-in catalog groups, one shared context per name.
inline GroupPtr Group(const std::string& name) { return Catalog::builtin().build(name); }

inline ContextPtr Context(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, ContextPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[name];
  if (!slot) slot = GroupContext::create(Group(name));
  return slot;
}

inline Rational Q(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace biset::testing
