#pragma once

#include "instanton/cohom/cohomology.hpp"
#include "instanton/config.hpp"
#include "instanton/la/blocks.hpp"
#include "instanton/la/modular.hpp"
#include "instanton/la/rank.hpp"
#include "instanton/la/sparse.hpp"
#include "instanton/maps/build.hpp"
#include "instanton/monad/monad.hpp"
#include "instanton/rep/basis.hpp"
#include "instanton/rep/expr.hpp"
#include "instanton/rep/lie.hpp"
#include "instanton/run/grid.hpp"
#include "instanton/run/report.hpp"
#include "instanton/verdict.hpp"
#include "instanton/version.hpp"
