#pragma once

#include "elimdist/brute_force.hpp"
#include "elimdist/canon.hpp"
#include "elimdist/corpus.hpp"
#include "elimdist/deletion_distance.hpp"
#include "elimdist/elimination_distance.hpp"
#include "elimdist/graph.hpp"
#include "elimdist/graph_io.hpp"
#include "elimdist/pipeline.hpp"
#include "elimdist/selftest.hpp"
#include "elimdist/tree_canon.hpp"
#include "elimdist/tree_order.hpp"
