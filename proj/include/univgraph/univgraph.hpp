#pragma once

#include "univgraph/color.hpp"
#include "univgraph/combinators.hpp"
#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"
#include "univgraph/homomorphism.hpp"
#include "univgraph/io.hpp"
#include "univgraph/linear_graph.hpp"
#include "univgraph/mp_universal.hpp"
#include "univgraph/objectives.hpp"
#include "univgraph/oracle.hpp"
#include "univgraph/parity_universal.hpp"
#include "univgraph/product.hpp"
#include "univgraph/random.hpp"
#include "univgraph/safety.hpp"
#include "univgraph/saturation.hpp"
#include "univgraph/scc.hpp"
#include "univgraph/solve.hpp"
#include "univgraph/strategy.hpp"
#include "univgraph/value_iteration.hpp"
