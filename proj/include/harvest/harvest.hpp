// Umbrella header for the numerics library.
#pragma once

#include "harvest/background.hpp"
#include "harvest/harvesting.hpp"
#include "harvest/kernels.hpp"
#include "harvest/quadrature.hpp"
#include "harvest/specialfn.hpp"
#include "harvest/switching.hpp"
