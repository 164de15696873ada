#pragma once

#include <string>

#include "hitreal/spectral.hpp"

namespace hitreal {

// Static sign diagram of the real locus: RP^1 drawn as a circle through
// theta = 2 atan(z), ovals shaded, arcs colored by the sign of q1 (of p when
// no differential is given), branch points and real zeros marked and labeled
// to four decimals. Display only; the exact analysis never reads it back.
std::string sign_diagram_svg(HyperellipticCurve& c);
std::string sign_diagram_svg(HyperellipticCurve& c, const QuadDifferential& q);

}  // namespace hitreal
