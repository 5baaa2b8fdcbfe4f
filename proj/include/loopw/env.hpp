#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "loopw/syntax.hpp"

namespace loopw {

// Ordered finite map from identifiers to formulas. Keys are unique.
template <class F>
class BasicEnv {
public:
  using Entry = std::pair<Ident, F>;

  BasicEnv() = default;
  BasicEnv(std::initializer_list<Entry> es) {
    for (const auto& e : es) *this = updated(e.first, e.second);
  }
  explicit BasicEnv(std::vector<Entry> es) {
    for (auto& e : es) *this = updated(e.first, std::move(e.second));
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  const F* find(const Ident& k) const {
    for (const auto& e : entries_)
      if (e.first == k) return &e.second;
    return nullptr;
  }
  bool contains(const Ident& k) const { return find(k) != nullptr; }

  std::vector<Ident> keys() const {
    std::vector<Ident> r;
    for (const auto& e : entries_) r.push_back(e.first);
    return r;
  }
  std::vector<F> image() const {
    std::vector<F> r;
    for (const auto& e : entries_) r.push_back(e.second);
    return r;
  }

  // `+!`: replace in place, or append.
  BasicEnv updated(const Ident& k, F f) const {
    BasicEnv r = *this;
    for (auto& e : r.entries_)
      if (e.first == k) {
        e.second = std::move(f);
        return r;
      }
    r.entries_.emplace_back(k, std::move(f));
    return r;
  }

  // `++`: right-biased union.
  BasicEnv concat(const BasicEnv& rhs) const {
    BasicEnv r = *this;
    for (const auto& e : rhs.entries_) r = r.updated(e.first, e.second);
    return r;
  }

  // Entries whose key is in dom (in this env's order), and the rest.
  // Fails when a key of dom is missing or repeated.
  std::optional<std::pair<BasicEnv, BasicEnv>> split(const std::vector<Ident>& dom) const {
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (!contains(dom[i])) return std::nullopt;
      for (std::size_t j = 0; j < i; ++j)
        if (dom[j] == dom[i]) return std::nullopt;
    }
    BasicEnv in, out;
    for (const auto& e : entries_) {
      if (std::find(dom.begin(), dom.end(), e.first) != dom.end())
        in.entries_.push_back(e);
      else
        out.entries_.push_back(e);
    }
    return std::make_pair(std::move(in), std::move(out));
  }

  BasicEnv restricted_to(const std::vector<Ident>& dom) const {
    BasicEnv r;
    for (const auto& e : entries_)
      if (std::find(dom.begin(), dom.end(), e.first) != dom.end()) r.entries_.push_back(e);
    return r;
  }

  template <class Fn>
  BasicEnv map(Fn fn) const {
    BasicEnv r;
    for (const auto& e : entries_) r.entries_.emplace_back(e.first, fn(e.second));
    return r;
  }

  // Same bindings, order ignored, strict formula equality.
  bool same_bindings(const BasicEnv& o) const {
    if (size() != o.size()) return false;
    for (const auto& e : entries_) {
      const F* g = o.find(e.first);
      if (!g || !(*g == e.second)) return false;
    }
    return true;
  }

  friend bool operator==(const BasicEnv& a, const BasicEnv& b) {
    return a.entries_ == b.entries_;
  }

private:
  std::vector<Entry> entries_;
};

using Env = BasicEnv<Formula>;

inline Env subst_env(const Env& e, const Substitution& s) {
  return e.map([&](const Formula& f) { return subst_formula_multi(f, s); });
}

inline IdentSet free_term_vars(const Env& e) { return free_term_vars(e.image()); }

}  // namespace loopw
