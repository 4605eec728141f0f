#pragma once

#include "dfc/asymptotics.hpp"
#include "dfc/ball.hpp"
#include "dfc/chebpoly.hpp"
#include "dfc/chebrec.hpp"
#include "dfc/errors.hpp"
#include "dfc/linalg.hpp"
#include "dfc/oreops.hpp"
#include "dfc/poly.hpp"
#include "dfc/ratcheb.hpp"
#include "dfc/rational.hpp"
#include "dfc/solver.hpp"
#include "dfc/validator.hpp"
