#pragma once

#include "stowage/algorithms.hpp"
#include "stowage/bench.hpp"
#include "stowage/generator.hpp"
#include "stowage/instance_io.hpp"
#include "stowage/lca.hpp"
#include "stowage/model.hpp"
#include "stowage/moves.hpp"
#include "stowage/oracle.hpp"
#include "stowage/render.hpp"
#include "stowage/rng.hpp"
#include "stowage/sa.hpp"
#include "stowage/trace.hpp"
#include "stowage/two_phase.hpp"
