#pragma once

#include "switchopt/benchmarks.hpp"
#include "switchopt/chaining.hpp"
#include "switchopt/errors.hpp"
#include "switchopt/flight.hpp"
#include "switchopt/genetic.hpp"
#include "switchopt/harness.hpp"
#include "switchopt/io.hpp"
#include "switchopt/local_search.hpp"
#include "switchopt/operators.hpp"
#include "switchopt/probe.hpp"
#include "switchopt/rng.hpp"
#include "switchopt/types.hpp"
