#pragma once

#include "semidyn/checks.hpp"
#include "semidyn/complex.hpp"
#include "semidyn/config.hpp"
#include "semidyn/error.hpp"
#include "semidyn/escape.hpp"
#include "semidyn/grid.hpp"
#include "semidyn/io.hpp"
#include "semidyn/julia.hpp"
#include "semidyn/map_catalog.hpp"
#include "semidyn/orbit.hpp"
#include "semidyn/parallel.hpp"
#include "semidyn/random.hpp"
#include "semidyn/semigroup.hpp"
