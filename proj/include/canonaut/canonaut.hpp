#pragma once

// Umbrella header for the whole library.

#include "canonaut/analysis.hpp"
#include "canonaut/autgroup.hpp"
#include "canonaut/charlattice.hpp"
#include "canonaut/errors.hpp"
#include "canonaut/mobius.hpp"
#include "canonaut/oracle.hpp"
#include "canonaut/parse.hpp"
#include "canonaut/pointcfg.hpp"
#include "canonaut/rational.hpp"
#include "canonaut/report_json.hpp"
#include "canonaut/roots.hpp"
#include "canonaut/surface.hpp"
#include "canonaut/tolerances.hpp"
#include "canonaut/validity.hpp"
#include "canonaut/wpoly.hpp"
