#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace rmk {

using WorldId = std::uint32_t;

/// Fixed-universe bitset over the worlds of one model.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  static WorldSet full(std::size_t universe) {
    WorldSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return size_; }

  bool contains(WorldId w) const { return (words_[w >> 6] >> (w & 63)) & 1U; }
  void insert(WorldId w) { words_[w >> 6] |= std::uint64_t{1} << (w & 63); }
  void erase(WorldId w) { words_[w >> 6] &= ~(std::uint64_t{1} << (w & 63)); }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool intersects(const WorldSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool subset_of(const WorldSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  WorldSet& operator&=(const WorldSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  WorldSet& operator|=(const WorldSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }

  WorldSet complement() const {
    WorldSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t bits = words_[i];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<WorldId>(i * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<WorldId> members() const {
    std::vector<WorldId> out;
    for_each([&](WorldId w) { out.push_back(w); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const WorldSet&, const WorldSet&) = default;

 private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct WorldSetHash {
  std::size_t operator()(const WorldSet& s) const {
    std::size_t h = s.universe();
    for (auto w : s.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace rmk
