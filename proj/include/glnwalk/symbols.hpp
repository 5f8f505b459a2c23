#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

namespace glnwalk {

// Interned identifier for a polynomial variable (t, s, N, L, tau1, x3, ...).
// Interning makes monomial keys cheap; names are only consulted when printing.
class Symbol {
 public:
  static Symbol named(std::string_view name) {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.ids.find(std::string(name));
    if (it != reg.ids.end()) return Symbol(it->second);
    if (name.empty()) throw std::invalid_argument("Symbol: empty name");
    std::uint32_t id = static_cast<std::uint32_t>(reg.names.size());
    reg.names.push_back(std::string(name));
    reg.ids.emplace(reg.names.back(), id);
    return Symbol(id);
  }

  std::uint32_t id() const { return id_; }

  const std::string& name() const {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    return reg.names[id_];
  }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }
  friend bool operator<(Symbol a, Symbol b) { return a.id_ < b.id_; }

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}

  struct Registry {
    std::mutex mu;
    std::deque<std::string> names;                       // stable addresses
    std::unordered_map<std::string, std::uint32_t> ids;  // name -> id
  };
  static Registry& registry() {
    static Registry r;
    return r;
  }

  std::uint32_t id_;
};

}  // namespace glnwalk
