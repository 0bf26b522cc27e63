#pragma once

// Umbrella header: leaf functions of induced subtrees, exact solvers and
// generators. JSON helpers live separately in flis/json_io.hpp.

#include "flis/bb_solver.hpp"
#include "flis/closed_forms.hpp"
#include "flis/configuration.hpp"
#include "flis/errors.hpp"
#include "flis/generators.hpp"
#include "flis/graph.hpp"
#include "flis/leaf_function.hpp"
#include "flis/leaf_potential.hpp"
#include "flis/oracle.hpp"
#include "flis/tree_dp.hpp"
