#pragma once

#include "betti.hpp"
#include "chain.hpp"
#include "charseries.hpp"
#include "codes.hpp"
#include "cone.hpp"
#include "fan.hpp"
#include "flags.hpp"
#include "intmath.hpp"
#include "json_io.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "symfunc.hpp"
#include "tpoly.hpp"
#include "verify.hpp"
