#pragma once

#include "ybhecke/exactalg/laurent_poly.hpp"
#include "ybhecke/exactalg/monomial.hpp"
#include "ybhecke/exactalg/random.hpp"
#include "ybhecke/exactalg/rational_function.hpp"
#include "ybhecke/exactalg/substitute.hpp"
#include "ybhecke/exactalg/text.hpp"
