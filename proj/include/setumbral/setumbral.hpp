#pragma once

#include "setumbral/abel.hpp"
#include "setumbral/chromatic.hpp"
#include "setumbral/chromatic_expansions.hpp"
#include "setumbral/error.hpp"
#include "setumbral/expansion.hpp"
#include "setumbral/family.hpp"
#include "setumbral/graph.hpp"
#include "setumbral/oracles.hpp"
#include "setumbral/partition.hpp"
#include "setumbral/poly.hpp"
#include "setumbral/rational.hpp"
#include "setumbral/setmap.hpp"
#include "setumbral/umbral.hpp"
