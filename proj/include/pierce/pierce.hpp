#pragma once

#include "pierce/config_space.hpp"
#include "pierce/errors.hpp"
#include "pierce/family.hpp"
#include "pierce/generators.hpp"
#include "pierce/geometry.hpp"
#include "pierce/independent_set.hpp"
#include "pierce/interval_piercing.hpp"
#include "pierce/io.hpp"
#include "pierce/line_solver.hpp"
#include "pierce/matching.hpp"
#include "pierce/oracles.hpp"
#include "pierce/pipeline.hpp"
#include "pierce/rational.hpp"
#include "pierce/scalar.hpp"
#include "pierce/set_cover.hpp"
#include "pierce/svg.hpp"
