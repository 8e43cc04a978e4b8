#pragma once

#include "edgebetti/betti.hpp"
#include "edgebetti/canonical.hpp"
#include "edgebetti/clusters.hpp"
#include "edgebetti/enumeration.hpp"
#include "edgebetti/error.hpp"
#include "edgebetti/experiments.hpp"
#include "edgebetti/graph.hpp"
#include "edgebetti/graph6.hpp"
#include "edgebetti/homology.hpp"
#include "edgebetti/templates.hpp"
