#pragma once

#include <vector>

#include "circode/zmod.hpp"

// Shared worked instances: the order-90 running example, the figure set
// with the length-4 series, the order-2430 example with no subgroup code,
// and the order-315 pyramidal set that is not inverse-closed.
namespace fixtures {

using circode::Elem;
using circode::ResidueSet;

inline ResidueSet ex90_s() {
  return ResidueSet(90, {1, 5, 6, 7, 83, 84, 85, 89});
}

inline ResidueSet ex90_s0() {
  return ResidueSet(90, {0, 1, 5, 6, 7, 83, 84, 85, 89});
}

inline ResidueSet ex90_d() {
  return ResidueSet(90, {0, 3, 18, 21, 36, 39, 54, 57, 72, 75});
}

inline ResidueSet fig90_s0() {
  return ResidueSet(90, {0, 1, 15, 16, 31, 59, 74, 75, 89});
}

inline ResidueSet ex2430_s() {
  return ResidueSet(2430, {1,    44,   45,   46,   224,  225,  226,  269,  270,
                           271,  314,  315,  316,  2114, 2115, 2116, 2159, 2160,
                           2161, 2204, 2205, 2206, 2384, 2385, 2386, 2429});
}

inline ResidueSet ex2430_s0() {
  std::vector<Elem> v(ex2430_s().elements());
  v.push_back(0);
  return ResidueSet(2430, std::move(v));
}

inline ResidueSet ex2430_d() {
  std::vector<Elem> base;
  for (Elem x = 0; x <= 42; x += 3) base.push_back(x);
  for (Elem x = 135; x <= 177; x += 3) base.push_back(x);
  std::vector<Elem> v;
  for (Elem h : {0, 810, 1620})
    for (Elem x : base) v.push_back(x + h);
  return ResidueSet(2430, std::move(v));
}

inline ResidueSet pyr315() {
  return ResidueSet(315, {0, 1, 14, 15, 16, 29, 30, 31, 44});
}

}  // namespace fixtures
