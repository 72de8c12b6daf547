#pragma once

#include "eurkit/bounds.hpp"
#include "eurkit/cli.hpp"
#include "eurkit/complex_matrix.hpp"
#include "eurkit/eig.hpp"
#include "eurkit/entropy.hpp"
#include "eurkit/errors.hpp"
#include "eurkit/experiments.hpp"
#include "eurkit/format.hpp"
#include "eurkit/io.hpp"
#include "eurkit/measurements.hpp"
#include "eurkit/probability.hpp"
#include "eurkit/rng.hpp"
#include "eurkit/states.hpp"
#include "eurkit/tolerances.hpp"
#include "eurkit/version.hpp"
