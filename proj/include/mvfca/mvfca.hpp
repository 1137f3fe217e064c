#pragma once

#include "acoustic.hpp"
#include "bessel.hpp"
#include "config.hpp"
#include "constants.hpp"
#include "csv.hpp"
#include "emission.hpp"
#include "errors.hpp"
#include "impurity.hpp"
#include "material.hpp"
#include "oracles.hpp"
#include "quadrature.hpp"
#include "regime.hpp"
#include "relaxation.hpp"
#include "special_functions.hpp"
#include "sweep.hpp"
#include "types.hpp"
#include "vec3.hpp"
