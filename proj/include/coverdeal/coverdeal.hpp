#pragma once

// Umbrella header for the library (the CLI lives in coverdeal/cli.hpp).

#include "coverdeal/covers.hpp"
#include "coverdeal/error.hpp"
#include "coverdeal/graph.hpp"
#include "coverdeal/invariants.hpp"
#include "coverdeal/io.hpp"
#include "coverdeal/monomial.hpp"
#include "coverdeal/planner.hpp"
#include "coverdeal/quotients.hpp"
#include "coverdeal/vertex_set.hpp"
