#pragma once

#include "chowkit/f4.hpp"

namespace chowkit::testing {

/// Both labeled F4 rings, built once per test binary.
inline const f4::Rings& f4_rings() {
  static const f4::Rings rings = f4::build_labeled_rings(2);
  return rings;
}

inline ChowElement el(const ChowRing& ring, const char* text) { return ring.parse(text); }

}  // namespace chowkit::testing
