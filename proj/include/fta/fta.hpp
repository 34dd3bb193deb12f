#pragma once

#include "fta/complex.hpp"
#include "fta/descent.hpp"
#include "fta/error.hpp"
#include "fta/evt_grid.hpp"
#include "fta/growth_bounds.hpp"
#include "fta/io.hpp"
#include "fta/lemmas.hpp"
#include "fta/polynomial.hpp"
#include "fta/region.hpp"
#include "fta/solver.hpp"
