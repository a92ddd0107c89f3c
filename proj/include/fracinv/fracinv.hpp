#pragma once

// everything except the acceptance runner and the test oracles
#include "fracinv/rational.hpp"
#include "fracinv/polynomial.hpp"
#include "fracinv/families.hpp"
#include "fracinv/power_form.hpp"
#include "fracinv/weights.hpp"
#include "fracinv/quadrature.hpp"
#include "fracinv/fracalc.hpp"
#include "fracinv/extension.hpp"
#include "fracinv/spectral.hpp"
#include "fracinv/favard.hpp"
