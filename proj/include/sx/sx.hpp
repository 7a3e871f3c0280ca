#pragma once

#include "sx/adjacency.hpp"
#include "sx/analysis.hpp"
#include "sx/boolean_matrix.hpp"
#include "sx/centrality.hpp"
#include "sx/complex.hpp"
#include "sx/csv.hpp"
#include "sx/error.hpp"
#include "sx/graph.hpp"
#include "sx/parallel.hpp"
#include "sx/plot.hpp"
#include "sx/ranking.hpp"
#include "sx/simplex.hpp"
#include "sx/walks.hpp"
