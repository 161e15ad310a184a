#include "hrmc/vertex_set.hpp"

#include <stdexcept>

namespace hrmc {

VertexSet::VertexSet(std::size_t capacity) : capacity_(capacity), words_(words_for(capacity), 0) {}

VertexSet VertexSet::of(std::size_t capacity, std::initializer_list<std::size_t> members) {
  return of(capacity, std::span<const std::size_t>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::size_t capacity, std::span<const std::size_t> members) {
  VertexSet s(capacity);
  for (std::size_t v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(std::size_t capacity) {
  VertexSet s(capacity);
  for (auto& w : s.words_) w = ~Word{0};
  if (capacity % kWordBits != 0 && !s.words_.empty()) {
    s.words_.back() = (Word{1} << (capacity % kWordBits)) - 1;
  }
  return s;
}

VertexSet VertexSet::from_words(std::size_t capacity, std::span<const Word> words) {
  if (words.size() != words_for(capacity)) {
    throw std::invalid_argument("VertexSet::from_words: block count does not match capacity");
  }
  VertexSet s(capacity);
  for (std::size_t i = 0; i < words.size(); ++i) s.words_[i] = words[i];
  if ((s & full(capacity)) != s) {
    throw std::invalid_argument("VertexSet::from_words: bits set beyond capacity");
  }
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  for (Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void VertexSet::check_index(std::size_t v) const {
  if (v >= capacity_) {
    throw std::invalid_argument("vertex index " + std::to_string(v) + " out of range [0, " +
                                std::to_string(capacity_) + ")");
  }
}

void VertexSet::check_same_capacity(const VertexSet& other) const {
  if (other.capacity_ != capacity_) {
    throw std::invalid_argument("VertexSet capacity mismatch: " + std::to_string(capacity_) +
                                " vs " + std::to_string(other.capacity_));
  }
}

bool VertexSet::contains(std::size_t v) const {
  if (v >= capacity_) return false;
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(std::size_t v) {
  check_index(v);
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(std::size_t v) {
  check_index(v);
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

std::optional<std::size_t> VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(capacity_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](std::size_t v) {
    if (!first_member) out += ", ";
    out += std::to_string(v);
    first_member = false;
  });
  out += "}";
  return out;
}

std::strong_ordering operator<=>(const VertexSet& lhs, const VertexSet& rhs) {
  if (auto c = lhs.capacity_ <=> rhs.capacity_; c != 0) return c;
  for (std::size_t i = lhs.words_.size(); i-- > 0;) {
    if (auto c = lhs.words_[i] <=> rhs.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace hrmc
