#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace wqo {

// A finite set of atom indices below 64, stored as a bitmask. Set systems,
// witness sets and deformation arguments all live in this representation.
class AtomSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr AtomSet() = default;
  constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}
  AtomSet(std::initializer_list<int> atoms) {
    for (int a : atoms) insert(a);
  }

  static AtomSet from(const std::vector<int>& atoms) {
    AtomSet s;
    for (int a : atoms) s.insert(a);
    return s;
  }
  static constexpr AtomSet single(int a) { return AtomSet(std::uint64_t{1} << a); }
  // {0, ..., n-1}
  static constexpr AtomSet prefix(int n) {
    return n >= 64 ? AtomSet(~std::uint64_t{0})
                   : AtomSet((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int a) const { return (bits_ >> a) & 1U; }
  constexpr bool subset_of(AtomSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(AtomSet o) const { return (bits_ & o.bits_) != 0; }
  // Index of the smallest atom; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  void insert(int a) { bits_ |= std::uint64_t{1} << a; }
  void erase(int a) { bits_ &= ~(std::uint64_t{1} << a); }

  constexpr AtomSet operator|(AtomSet o) const { return AtomSet(bits_ | o.bits_); }
  constexpr AtomSet operator&(AtomSet o) const { return AtomSet(bits_ & o.bits_); }
  constexpr AtomSet operator-(AtomSet o) const { return AtomSet(bits_ & ~o.bits_); }
  AtomSet& operator|=(AtomSet o) { bits_ |= o.bits_; return *this; }
  AtomSet& operator&=(AtomSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const AtomSet&) const = default;
  constexpr auto operator<=>(const AtomSet&) const = default;

  std::vector<int> atoms() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace wqo

template <>
struct std::hash<wqo::AtomSet> {
  std::size_t operator()(wqo::AtomSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
