#pragma once

// Umbrella header.

#include "specfun.hpp"
#include "pct.hpp"
#include "oscillator.hpp"
#include "stencil.hpp"
#include "susy.hpp"
#include "extensions.hpp"
#include "quadrature.hpp"
#include "tridiagonal.hpp"
#include "oracle.hpp"
