#pragma once

#include "kzeta/alternating.hpp"
#include "kzeta/elementary.hpp"
#include "kzeta/errors.hpp"
#include "kzeta/euler_maclaurin.hpp"
#include "kzeta/fpi.hpp"
#include "kzeta/gamma.hpp"
#include "kzeta/quadrature.hpp"
#include "kzeta/report.hpp"
#include "kzeta/selector.hpp"
#include "kzeta/series.hpp"
#include "kzeta/summation.hpp"
