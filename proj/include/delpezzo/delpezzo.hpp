#pragma once

#include "checked.hpp"
#include "curve_criteria.hpp"
#include "errors.hpp"
#include "line_geometry.hpp"
#include "picard_lattice.hpp"
#include "sweep.hpp"
#include "weyl_action.hpp"
