#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hrmc/vertex_set.hpp"

namespace hrmc {

/// Largest palette a ColorSet can represent (one bit per color).
inline constexpr std::size_t kMaxPalette = 64;

using ColorMask = std::uint64_t;

/// Subset of the palette {1..k}. Colors are 1-based at this interface and
/// stored as bit (c - 1) of the mask.
class ColorSet {
 public:
  ColorSet() = default;
  explicit ColorSet(std::size_t palette_size);
  ColorSet(std::size_t palette_size, std::initializer_list<std::size_t> colors);
  static ColorSet from_mask(std::size_t palette_size, ColorMask mask);
  static ColorSet full(std::size_t palette_size);

  std::size_t palette_size() const { return palette_; }
  ColorMask mask() const { return mask_; }
  std::size_t size() const;
  bool empty() const { return mask_ == 0; }

  bool contains(std::size_t color) const;
  void insert(std::size_t color);

  /// Members in ascending order, 1-based.
  std::vector<std::size_t> colors() const;
  std::string to_string() const;

  ColorSet& operator|=(const ColorSet& other);

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  std::size_t palette_ = 0;
  ColorMask mask_ = 0;
};

ColorMask full_palette_mask(std::size_t palette_size);

/// The multicoloring kappa: V -> P({1..k}). Empty sets are allowed.
class Multicoloring {
 public:
  Multicoloring() = default;
  /// All vertices uncolored.
  Multicoloring(std::size_t palette_size, std::size_t num_vertices);
  Multicoloring(std::size_t palette_size, std::vector<ColorSet> assignment);

  /// 1-based color lists, one per vertex.
  static Multicoloring from_lists(std::size_t palette_size,
                                  const std::vector<std::vector<std::size_t>>& lists);

  std::size_t palette_size() const { return palette_; }
  std::size_t size() const { return masks_.size(); }

  ColorSet at(std::size_t v) const;
  void set(std::size_t v, const ColorSet& colors);

  std::span<const ColorMask> masks() const { return masks_; }
  ColorMask full_mask() const { return full_palette_mask(palette_); }

  friend bool operator==(const Multicoloring&, const Multicoloring&) = default;

 private:
  std::size_t palette_ = 0;
  std::vector<ColorMask> masks_;
};

ColorSet union_over(const Multicoloring& kappa, const VertexSet& vs);
bool has_all_colors(const Multicoloring& kappa, const VertexSet& vs);

/// Adds color k+1 to every vertex.
Multicoloring extend_palette(const Multicoloring& kappa);
/// Appends one uncolored vertex.
Multicoloring extend_vertex(const Multicoloring& kappa);

/// class(c) = { v : c in kappa(v) }; index 0 holds color 1.
using ColorClasses = std::vector<VertexSet>;

ColorClasses classes(const Multicoloring& kappa);
Multicoloring from_classes(const ColorClasses& color_classes, std::size_t num_vertices);

/// Color classes sorted by numeric mask value. Invariant under any
/// permutation of the palette.
std::vector<VertexSet> canonical_form(const Multicoloring& kappa);

/// Color c becomes perm[c - 1] + 1.
Multicoloring permute_colors(const Multicoloring& kappa, std::span<const std::size_t> perm);
/// Vertex v's colors move to vertex perm[v].
Multicoloring permute_vertices(const Multicoloring& kappa, std::span<const std::size_t> perm);
/// Keeps the vertices of `keep` in ascending order.
Multicoloring restrict_to(const Multicoloring& kappa, const VertexSet& keep);

}  // namespace hrmc
