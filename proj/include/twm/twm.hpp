#pragma once

#include "twm/arithsums.hpp"
#include "twm/cfrac.hpp"
#include "twm/characters.hpp"
#include "twm/common.hpp"
#include "twm/contour.hpp"
#include "twm/estermann.hpp"
#include "twm/moments.hpp"
#include "twm/parallel.hpp"
#include "twm/reciprocity.hpp"
#include "twm/specfun.hpp"
