#pragma once

#include "impcol/audit.hpp"
#include "impcol/brute_force.hpp"
#include "impcol/coloring.hpp"
#include "impcol/cycles.hpp"
#include "impcol/discharging.hpp"
#include "impcol/error.hpp"
#include "impcol/gadgets.hpp"
#include "impcol/generate.hpp"
#include "impcol/graph.hpp"
#include "impcol/io.hpp"
#include "impcol/mad.hpp"
#include "impcol/plane_graph.hpp"
#include "impcol/rational.hpp"
#include "impcol/recolor.hpp"
#include "impcol/reducible.hpp"
#include "impcol/solver.hpp"
#include "impcol/structures.hpp"
#include "impcol/surgery.hpp"
