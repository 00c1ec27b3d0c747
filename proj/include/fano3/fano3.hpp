#pragma once

// Umbrella header: the whole library in dependency order.

#include "fano3/rational.hpp"
#include "fano3/poly.hpp"
#include "fano3/cyclotomic.hpp"
#include "fano3/rational_function.hpp"
#include "fano3/singularity.hpp"
#include "fano3/riemann_roch.hpp"
#include "fano3/pipeline.hpp"
#include "fano3/model.hpp"
#include "fano3/catalog.hpp"
#include "fano3/tables.hpp"
