#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynlabel/bits.hpp"
#include "dynlabel/fsdl/scheme_state.hpp"
#include "dynlabel/functions/tree_function.hpp"
#include "dynlabel/static_schemes/static_scheme.hpp"

namespace dynlabel::fsdl {

/// Wire label plus the epoch of the last change. The epoch is bookkeeping only and is
/// not part of the bits.
struct DynamicLabel {
  BitString bits;
  std::uint64_t epoch = 0;
};

/// Parsed form: one entry per level p..2 (outermost first), then the level-1 label.
struct ParsedLabel {
  struct Layer {
    bool active = false;
    BitString anchor;
    BitString f_value;
  };
  std::vector<Layer> layers;
  BitString base;

  std::size_t nesting_depth() const { return layers.size() + 1; }
};

/// gamma(p), then for l = p..2 either `1 <anchor> <F>` (both length-prefixed) or a single
/// `0` for a level whose instance has not started counting, then the length-prefixed
/// level-1 label.
BitString encode_label(const LabelState& state);
ParsedLabel parse_label(const BitString& bits);

/// Step-by-step decoder: walk down while anchors agree, otherwise combine
/// F(x,u), F(u,v) and F(v,y) at the first level where they differ.
functions::FValue decode_labels(const static_schemes::StaticScheme& scheme, const BitString& x,
                                const BitString& y);

}  // namespace dynlabel::fsdl
