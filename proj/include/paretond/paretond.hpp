#pragma once

#include "paretond/bench.hpp"
#include "paretond/datasets.hpp"
#include "paretond/dominance.hpp"
#include "paretond/filters.hpp"
#include "paretond/io.hpp"
#include "paretond/minkowski.hpp"
#include "paretond/nd_tree.hpp"
#include "paretond/qnd_tree.hpp"
#include "paretond/rng.hpp"
#include "paretond/selection.hpp"
#include "paretond/tnd_tree.hpp"
#include "paretond/types.hpp"
