#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace sqcm {

/// A set of small integer ids (0..63) stored as a bitmask. Doubles as the
/// vertex-set type for graphs and as the face type for simplicial complexes.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) bits_ |= std::uint64_t{1} << v;
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr VertexSet single(int v) { return from_bits(std::uint64_t{1} << v); }
  /// {0, 1, ..., n-1}
  static constexpr VertexSet full(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }

  constexpr VertexSet with(int v) const { return from_bits(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return from_bits(bits_ & ~(std::uint64_t{1} << v)); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

  /// Ascending iteration over members.
  class iterator {
   public:
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member sequences:
/// {0,5} < {1,2} < {1,2,4} < {1,3}.
inline bool seq_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x && y) {
    int la = std::countr_zero(x), lb = std::countr_zero(y);
    if (la != lb) return la < lb;
    x &= x - 1;
    y &= y - 1;
  }
  return !x && y;
}

/// Cardinality first, then seq_less. This is the face enumeration order.
inline bool card_seq_less(VertexSet a, VertexSet b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return seq_less(a, b);
}

}  // namespace sqcm
