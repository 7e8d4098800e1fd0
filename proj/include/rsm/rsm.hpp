#pragma once

#include "rsm/basis.hpp"
#include "rsm/coupling.hpp"
#include "rsm/diagnostics.hpp"
#include "rsm/discretization.hpp"
#include "rsm/domain_optimizer.hpp"
#include "rsm/eigensolver.hpp"
#include "rsm/errors.hpp"
#include "rsm/interpolation.hpp"
#include "rsm/lhat_curve.hpp"
#include "rsm/polynomial.hpp"
#include "rsm/potentials.hpp"
#include "rsm/quadrature.hpp"
