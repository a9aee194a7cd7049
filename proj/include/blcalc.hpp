// Umbrella header.
#pragma once

#include "blcalc/amalgamation.hpp"
#include "blcalc/classifier.hpp"
#include "blcalc/constructions.hpp"
#include "blcalc/json_io.hpp"
#include "blcalc/logic.hpp"
