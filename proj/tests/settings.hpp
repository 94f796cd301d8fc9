#pragma once

// Settings from the worked examples, built directly in code.

#include "qi/quiver.hpp"

namespace qi::fixtures {

inline Arrow arrow(std::string id, std::size_t head, std::size_t tail, Form form = Form::M) {
  return Arrow{std::move(id), head, tail, form, std::nullopt};
}

/// Two vertices swapped by i, both GL, alpha and beta from 2 to 1 with form S+.
inline MixedQuiverSetting symmetric_pair(std::size_t n) {
  MixedQuiverSetting s;
  s.quiver = {2, {arrow("alpha", 1, 2, Form::SPlus), arrow("beta", 1, 2, Form::SPlus)}};
  s.dims = {n, n};
  s.groups = {Group::GL, Group::GL};
  s.involution = {2, 1};
  return s;
}

/// Five vertices: GL pair {1,2}, SL pair {3,4}, O vertex 5.
inline MixedQuiverSetting five_vertex(std::size_t n12, std::size_t n34, std::size_t n5) {
  MixedQuiverSetting s;
  s.quiver = {5,
              {arrow("alpha", 2, 1), arrow("beta", 1, 2, Form::SPlus), arrow("gamma", 1, 3), arrow("delta", 3, 5)}};
  s.dims = {n12, n12, n34, n34, n5};
  s.groups = {Group::GL, Group::GL, Group::SL, Group::SL, Group::O};
  s.involution = {2, 1, 4, 3, 5};
  return s;
}

/// Vertices 1, 2 (GL pair) and 3 (O): alpha 3 -> 1, beta 1 -> 2 (S+), gamma 2 -> 3.
inline MixedQuiverSetting triangle(std::size_t n, std::size_t m) {
  MixedQuiverSetting s;
  s.quiver = {3, {arrow("alpha", 1, 3), arrow("beta", 2, 1, Form::SPlus), arrow("gamma", 3, 2)}};
  s.dims = {n, n, m};
  s.groups = {Group::GL, Group::GL, Group::O};
  s.involution = {2, 1, 3};
  return s;
}

/// One vertex carrying `g`, with d loops of form M.
inline MixedQuiverSetting loops(Group g, std::size_t n, std::size_t d) {
  MixedQuiverSetting s;
  s.quiver.vertex_count = 1;
  for (std::size_t k = 1; k <= d; ++k) s.quiver.arrows.push_back(arrow("X" + std::to_string(k), 1, 1));
  s.dims = {n};
  s.groups = {g};
  s.involution = {1};
  return s;
}

}  // namespace qi::fixtures
