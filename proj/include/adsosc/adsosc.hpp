#pragma once

// Umbrella header for the numerical library (the CLI layer is in cli_io.hpp).

#include "adsosc/errors.hpp"
#include "adsosc/params.hpp"
#include "adsosc/specfun.hpp"
#include "adsosc/grid.hpp"
#include "adsosc/model1d.hpp"
#include "adsosc/model3d.hpp"
#include "adsosc/fdoracle.hpp"
#include "adsosc/verify.hpp"
#include "adsosc/checks.hpp"
