#pragma once

#include "h1/coulomb.hpp"
#include "h1/errors.hpp"
#include "h1/grid.hpp"
#include "h1/oscillator.hpp"
#include "h1/special.hpp"
#include "h1/verify/checks.hpp"
#include "h1/verify/eigen.hpp"
#include "h1/verify/oracles.hpp"
#include "h1/verify/quadrature.hpp"
#include "h1/verify/report.hpp"
#include "h1/verify/residual.hpp"
#include "h1/verify/suites.hpp"
