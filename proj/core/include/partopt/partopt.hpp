#pragma once

#include "partopt/bench.hpp"
#include "partopt/bnb.hpp"
#include "partopt/brute_force.hpp"
#include "partopt/ga.hpp"
#include "partopt/generator.hpp"
#include "partopt/graph.hpp"
#include "partopt/instance_io.hpp"
#include "partopt/oracle.hpp"
#include "partopt/result.hpp"
#include "partopt/sweep.hpp"
