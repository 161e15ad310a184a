#include "hrmc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hrmc {

namespace {

void check_palette(std::size_t palette_size) {
  if (palette_size > kMaxPalette) {
    throw std::invalid_argument("palette size " + std::to_string(palette_size) + " exceeds the maximum of " +
                                std::to_string(kMaxPalette));
  }
}

void check_permutation(std::span<const std::size_t> perm, std::size_t expected) {
  if (perm.size() != expected) throw std::invalid_argument("permutation has the wrong length");
  std::vector<bool> hit(expected, false);
  for (std::size_t p : perm) {
    if (p >= expected || hit[p]) throw std::invalid_argument("not a permutation");
    hit[p] = true;
  }
}

}  // namespace

ColorMask full_palette_mask(std::size_t palette_size) {
  check_palette(palette_size);
  return palette_size == kMaxPalette ? ~ColorMask{0} : (ColorMask{1} << palette_size) - 1;
}

ColorSet::ColorSet(std::size_t palette_size) : palette_(palette_size) { check_palette(palette_size); }

ColorSet::ColorSet(std::size_t palette_size, std::initializer_list<std::size_t> colors)
    : ColorSet(palette_size) {
  for (std::size_t c : colors) insert(c);
}

ColorSet ColorSet::from_mask(std::size_t palette_size, ColorMask mask) {
  ColorSet s(palette_size);
  if ((mask & ~full_palette_mask(palette_size)) != 0) {
    throw std::invalid_argument("color mask has bits outside the palette");
  }
  s.mask_ = mask;
  return s;
}

ColorSet ColorSet::full(std::size_t palette_size) {
  return from_mask(palette_size, full_palette_mask(palette_size));
}

std::size_t ColorSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

bool ColorSet::contains(std::size_t color) const {
  return color >= 1 && color <= palette_ && ((mask_ >> (color - 1)) & 1U);
}

void ColorSet::insert(std::size_t color) {
  if (color < 1 || color > palette_) {
    throw std::invalid_argument("color " + std::to_string(color) + " outside palette {1.." +
                                std::to_string(palette_) + "}");
  }
  mask_ |= ColorMask{1} << (color - 1);
}

std::vector<std::size_t> ColorSet::colors() const {
  std::vector<std::size_t> out;
  for (ColorMask m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
  }
  return out;
}

std::string ColorSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t c : colors()) {
    if (!first) out += ", ";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

ColorSet& ColorSet::operator|=(const ColorSet& other) {
  if (other.palette_ != palette_) throw std::invalid_argument("palette size mismatch");
  mask_ |= other.mask_;
  return *this;
}

Multicoloring::Multicoloring(std::size_t palette_size, std::size_t num_vertices)
    : palette_(palette_size), masks_(num_vertices, 0) {
  check_palette(palette_size);
}

Multicoloring::Multicoloring(std::size_t palette_size, std::vector<ColorSet> assignment)
    : Multicoloring(palette_size, assignment.size()) {
  for (std::size_t v = 0; v < assignment.size(); ++v) set(v, assignment[v]);
}

Multicoloring Multicoloring::from_lists(std::size_t palette_size,
                                        const std::vector<std::vector<std::size_t>>& lists) {
  Multicoloring kappa(palette_size, lists.size());
  for (std::size_t v = 0; v < lists.size(); ++v) {
    ColorSet s(palette_size);
    for (std::size_t c : lists[v]) s.insert(c);
    kappa.set(v, s);
  }
  return kappa;
}

ColorSet Multicoloring::at(std::size_t v) const {
  if (v >= masks_.size()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  return ColorSet::from_mask(palette_, masks_[v]);
}

void Multicoloring::set(std::size_t v, const ColorSet& colors) {
  if (v >= masks_.size()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  if (colors.palette_size() != palette_) throw std::invalid_argument("palette size mismatch");
  masks_[v] = colors.mask();
}

ColorSet union_over(const Multicoloring& kappa, const VertexSet& vs) {
  if (vs.capacity() > kappa.size()) {
    throw std::invalid_argument("vertex set exceeds the coloring's vertex count");
  }
  ColorMask acc = 0;
  const auto masks = kappa.masks();
  vs.for_each([&](std::size_t v) { acc |= masks[v]; });
  return ColorSet::from_mask(kappa.palette_size(), acc);
}

bool has_all_colors(const Multicoloring& kappa, const VertexSet& vs) {
  return union_over(kappa, vs).mask() == kappa.full_mask();
}

Multicoloring extend_palette(const Multicoloring& kappa) {
  const std::size_t k = kappa.palette_size() + 1;
  Multicoloring out(k, kappa.size());
  const ColorMask added = ColorMask{1} << (k - 1);
  for (std::size_t v = 0; v < kappa.size(); ++v) {
    out.set(v, ColorSet::from_mask(k, kappa.masks()[v] | added));
  }
  return out;
}

Multicoloring extend_vertex(const Multicoloring& kappa) {
  Multicoloring out(kappa.palette_size(), kappa.size() + 1);
  for (std::size_t v = 0; v < kappa.size(); ++v) out.set(v, kappa.at(v));
  return out;
}

ColorClasses classes(const Multicoloring& kappa) {
  const std::size_t n = kappa.size();
  ColorClasses out(kappa.palette_size(), VertexSet(n));
  for (std::size_t v = 0; v < n; ++v) {
    for (ColorMask m = kappa.masks()[v]; m != 0; m &= m - 1) {
      out[static_cast<std::size_t>(std::countr_zero(m))].insert(v);
    }
  }
  return out;
}

Multicoloring from_classes(const ColorClasses& color_classes, std::size_t num_vertices) {
  const std::size_t k = color_classes.size();
  std::vector<ColorMask> masks(num_vertices, 0);
  for (std::size_t c = 0; c < k; ++c) {
    if (color_classes[c].capacity() != num_vertices) {
      throw std::invalid_argument("color class capacity does not match vertex count");
    }
    color_classes[c].for_each([&](std::size_t v) { masks[v] |= ColorMask{1} << c; });
  }
  Multicoloring kappa(k, num_vertices);
  for (std::size_t v = 0; v < num_vertices; ++v) kappa.set(v, ColorSet::from_mask(k, masks[v]));
  return kappa;
}

std::vector<VertexSet> canonical_form(const Multicoloring& kappa) {
  auto out = classes(kappa);
  std::sort(out.begin(), out.end());
  return out;
}

Multicoloring permute_colors(const Multicoloring& kappa, std::span<const std::size_t> perm) {
  const std::size_t k = kappa.palette_size();
  check_permutation(perm, k);
  Multicoloring out(k, kappa.size());
  for (std::size_t v = 0; v < kappa.size(); ++v) {
    ColorMask mapped = 0;
    for (ColorMask m = kappa.masks()[v]; m != 0; m &= m - 1) {
      mapped |= ColorMask{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
    }
    out.set(v, ColorSet::from_mask(k, mapped));
  }
  return out;
}

Multicoloring permute_vertices(const Multicoloring& kappa, std::span<const std::size_t> perm) {
  check_permutation(perm, kappa.size());
  Multicoloring out(kappa.palette_size(), kappa.size());
  for (std::size_t v = 0; v < kappa.size(); ++v) out.set(perm[v], kappa.at(v));
  return out;
}

Multicoloring restrict_to(const Multicoloring& kappa, const VertexSet& keep) {
  const auto members = keep.members();
  Multicoloring out(kappa.palette_size(), members.size());
  for (std::size_t i = 0; i < members.size(); ++i) out.set(i, kappa.at(members[i]));
  return out;
}

}  // namespace hrmc
