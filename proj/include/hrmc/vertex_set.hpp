#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hrmc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Subset of the vertex range [0, capacity) stored as a fixed-width bit mask.
///
/// The mask is split into 64-bit blocks so the capacity is not limited to a
/// machine word. Bits at or above `capacity` are always zero. Binary set
/// operations require both operands to share the same capacity.
///
/// Ordering (`operator<=>`) compares the numeric value of the mask, most
/// significant block first. This is the order used for canonical color-class
/// sequences.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity);

  static VertexSet of(std::size_t capacity, std::initializer_list<std::size_t> members);
  static VertexSet of(std::size_t capacity, std::span<const std::size_t> members);
  static VertexSet full(std::size_t capacity);
  /// Builds a set from raw blocks; bits beyond `capacity` must be clear.
  static VertexSet from_words(std::size_t capacity, std::span<const Word> words);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(std::size_t v) const;
  void insert(std::size_t v);
  void erase(std::size_t v);

  /// Smallest member, if any.
  std::optional<std::size_t> first() const;
  std::vector<std::size_t> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  std::span<const Word> words() const { return words_; }

  /// "{0, 3, 6}" style rendering.
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& lhs, const VertexSet& rhs);

 private:
  void check_index(std::size_t v) const;
  void check_same_capacity(const VertexSet& other) const;

  std::size_t capacity_ = 0;
  std::vector<Word> words_;
};

inline VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
inline VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
inline VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

}  // namespace hrmc
