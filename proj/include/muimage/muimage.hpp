#pragma once

// Umbrella header: exact invariants of weighted-homogeneous map-germs
// (C^n, 0) -> (C^{n+1}, 0) from their weights and degrees, interpolation of
// the universal image-Milnor-number coefficients, and multiple-point ideal
// construction via iterated divided differences.

#include "muimage/errors.hpp"
#include "muimage/rational.hpp"
#include "muimage/polynomial.hpp"
#include "muimage/parser.hpp"
#include "muimage/linear_system.hpp"
#include "muimage/grading.hpp"
#include "muimage/multi_index.hpp"
#include "muimage/interpolation.hpp"
#include "muimage/formulas.hpp"
#include "muimage/germ.hpp"
#include "muimage/catalog.hpp"
