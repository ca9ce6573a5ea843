#pragma once

#include "census.hpp"
#include "growth.hpp"
#include "lucas_core.hpp"
#include "numeric.hpp"
#include "numutil.hpp"
#include "pell.hpp"
#include "poly.hpp"
#include "term_sets.hpp"
