#pragma once

#include "focal_sieve/extremes.hpp"
#include "focal_sieve/focal.hpp"
#include "focal_sieve/integer.hpp"
#include "focal_sieve/plane.hpp"
#include "focal_sieve/rational.hpp"
#include "focal_sieve/remainders.hpp"
#include "focal_sieve/render.hpp"
#include "focal_sieve/sieve.hpp"
#include "focal_sieve/verify.hpp"
