#pragma once

#include "discbound/binomial.hpp"
#include "discbound/bound_interval.hpp"
#include "discbound/box.hpp"
#include "discbound/concentration.hpp"
#include "discbound/errors.hpp"
#include "discbound/methods.hpp"
#include "discbound/nest.hpp"
#include "discbound/refinement.hpp"
#include "discbound/sample.hpp"
#include "discbound/summation.hpp"
#include "discbound/verify.hpp"
