#pragma once

// Umbrella header.

#include "qssa/core.hpp"
#include "qssa/crn.hpp"
#include "qssa/factor.hpp"
#include "qssa/galois.hpp"
#include "qssa/groebner.hpp"
#include "qssa/groups.hpp"
#include "qssa/ideal.hpp"
#include "qssa/modp.hpp"
#include "qssa/param_gcd.hpp"
#include "qssa/param_poly.hpp"
#include "qssa/pipeline.hpp"
#include "qssa/poly.hpp"
#include "qssa/ratelaw.hpp"
#include "qssa/ratfunc.hpp"
#include "qssa/structure.hpp"
#include "qssa/unipoly.hpp"
