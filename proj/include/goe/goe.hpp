#pragma once

#include "goe/space.hpp"
#include "goe/spaces.hpp"
#include "goe/geometry.hpp"
#include "goe/amenability.hpp"
#include "goe/tiling.hpp"
#include "goe/automaton.hpp"
#include "goe/analyzer.hpp"
