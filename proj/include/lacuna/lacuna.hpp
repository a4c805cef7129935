#pragma once

// Umbrella header.

#include "lacuna/decimal.hpp"
#include "lacuna/enclosure.hpp"
#include "lacuna/error.hpp"
#include "lacuna/lacunary.hpp"
#include "lacuna/omega.hpp"
#include "lacuna/rational.hpp"
#include "lacuna/report.hpp"
#include "lacuna/sieve.hpp"
#include "lacuna/targeting.hpp"
#include "lacuna/trig.hpp"
