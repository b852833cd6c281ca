#pragma once

#include "pancyc/cycles.hpp"
#include "pancyc/enumerate.hpp"
#include "pancyc/families.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/graph_io.hpp"
#include "pancyc/harness.hpp"
#include "pancyc/heavy.hpp"
#include "pancyc/isomorphism.hpp"
#include "pancyc/pattern.hpp"
#include "pancyc/random.hpp"
