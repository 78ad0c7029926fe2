#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace invcurve {

// Interned name. Equality is pointer identity, ordering is by name so that
// canonical forms do not depend on interning history.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  const std::string& name() const { return *name_; }
  bool valid() const { return name_ != nullptr; }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.name_ != b.name_; }
  friend bool operator<(Symbol a, Symbol b) {
    return a.name_ != b.name_ && *a.name_ < *b.name_;
  }

  std::size_t hash() const { return std::hash<const void*>()(name_); }

 private:
  const std::string* name_ = nullptr;
};

}  // namespace invcurve

template <>
struct std::hash<invcurve::Symbol> {
  std::size_t operator()(invcurve::Symbol s) const { return s.hash(); }
};
