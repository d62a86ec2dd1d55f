#pragma once

#include "assignment.hpp"
#include "claims.hpp"
#include "datagen.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "model.hpp"
#include "solvers.hpp"
#include "sweep.hpp"
