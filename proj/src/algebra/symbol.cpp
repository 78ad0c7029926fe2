#include "invcurve/algebra/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace invcurve {

namespace {

struct Registry {
  std::mutex mutex;
  std::unordered_set<std::string> names;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mutex);
  auto it = r.names.emplace(name).first;
  name_ = &*it;
}

}  // namespace invcurve
