#pragma once

#include "gsa/bench.hpp"
#include "gsa/classify.hpp"
#include "gsa/driver.hpp"
#include "gsa/generators.hpp"
#include "gsa/graph.hpp"
#include "gsa/graph_io.hpp"
#include "gsa/merge.hpp"
#include "gsa/oracle.hpp"
#include "gsa/reduce.hpp"
#include "gsa/types.hpp"
