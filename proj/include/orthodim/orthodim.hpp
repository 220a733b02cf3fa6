#pragma once

#include "orthodim/coloring/pipeline.hpp"
#include "orthodim/coloring/planted.hpp"
#include "orthodim/combinatorics/exact_search.hpp"
#include "orthodim/combinatorics/families.hpp"
#include "orthodim/combinatorics/io.hpp"
#include "orthodim/exactalg/io.hpp"
#include "orthodim/exactalg/linalg.hpp"
#include "orthodim/reductions/label_cover_reduction.hpp"
#include "orthodim/reductions/lexicographic.hpp"
#include "orthodim/reductions/uniformity.hpp"
#include "orthodim/representations/conversions.hpp"
#include "orthodim/representations/io.hpp"
#include "orthodim/representations/od_search.hpp"
#include "orthodim/representations/ramsey.hpp"
#include "orthodim/representations/refute.hpp"
#include "orthodim/representations/sandwich.hpp"
#include "orthodim/representations/subspace.hpp"
#include "orthodim/representations/symmetrize.hpp"
#include "orthodim/sdp/io.hpp"
#include "orthodim/sdp/rounding.hpp"
#include "orthodim/sdp/solver.hpp"
#include "orthodim/version.hpp"
