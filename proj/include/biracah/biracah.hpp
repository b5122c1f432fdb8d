#pragma once

// Umbrella header for the full library.

#include "biracah/bannai.hpp"
#include "biracah/complexhp.hpp"
#include "biracah/genfun.hpp"
#include "biracah/jacobi.hpp"
#include "biracah/numeric.hpp"
#include "biracah/quadrature.hpp"
#include "biracah/racah.hpp"
#include "biracah/rng.hpp"
#include "biracah/spherewave.hpp"
#include "biracah/verify.hpp"

