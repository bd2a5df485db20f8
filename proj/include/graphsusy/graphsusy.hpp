#pragma once

#include "graphsusy/continuum.hpp"
#include "graphsusy/dynamics.hpp"
#include "graphsusy/eigensolver.hpp"
#include "graphsusy/error.hpp"
#include "graphsusy/generators.hpp"
#include "graphsusy/graph.hpp"
#include "graphsusy/graph_io.hpp"
#include "graphsusy/matrix.hpp"
#include "graphsusy/morse.hpp"
#include "graphsusy/operators.hpp"
#include "graphsusy/rewiring.hpp"
#include "graphsusy/spectral.hpp"
#include "graphsusy/susy.hpp"
#include "graphsusy/walks.hpp"
