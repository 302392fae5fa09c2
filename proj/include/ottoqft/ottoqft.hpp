#ifndef OTTOQFT_OTTOQFT_HPP
#define OTTOQFT_OTTOQFT_HPP

#include "ottoqft/algebra.hpp"
#include "ottoqft/config.hpp"
#include "ottoqft/cycle.hpp"
#include "ottoqft/dawson.hpp"
#include "ottoqft/error.hpp"
#include "ottoqft/minkowski.hpp"
#include "ottoqft/oracle.hpp"
#include "ottoqft/sweep.hpp"
#include "ottoqft/verify.hpp"

#endif
