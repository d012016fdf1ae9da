#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace permgraph {

using Element = std::uint32_t;

// Dense bit-set over the element indices {0, ..., universe-1}. Iteration is in
// increasing index order, so the set doubles as a sorted element list.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element e) const noexcept {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void insert(Element e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  // Removes every element of `other`.
  ElementSet& subtract(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<Element>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  bool operator==(const ElementSet& other) const = default;

  // Lexicographic order of the sorted element lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff == 0) continue;
      // Both lists agree below the lowest differing element x; exactly one
      // of them continues with x.
      const std::uint64_t low = diff & (~diff + 1);
      const std::uint64_t above = ~((low - 1) | low);
      if (a.words_[i] & low) return (b.words_[i] & above) != 0 || tail_nonempty(b, i + 1);
      return (a.words_[i] & above) == 0 && !tail_nonempty(a, i + 1);
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static bool tail_nonempty(const ElementSet& s, std::size_t from) {
    for (std::size_t i = from; i < s.words_.size(); ++i)
      if (s.words_[i]) return true;
    return false;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace permgraph
