#pragma once

#include "polysimp/bench.hpp"
#include "polysimp/cell_reachability.hpp"
#include "polysimp/frechet.hpp"
#include "polysimp/global_frechet.hpp"
#include "polysimp/io.hpp"
#include "polysimp/local_simplify.hpp"
#include "polysimp/lp_geometry.hpp"
#include "polysimp/oracle.hpp"
#include "polysimp/ov_hardness.hpp"
#include "polysimp/simplification.hpp"
#include "polysimp/solver.hpp"
