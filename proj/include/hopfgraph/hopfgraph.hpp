#pragma once

#include "error.hpp"
#include "rational.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "canonical.hpp"
#include "universe.hpp"
#include "graph_io.hpp"
#include "morphisms.hpp"
#include "sums.hpp"
#include "coproducts.hpp"
#include "products.hpp"
#include "hopf.hpp"
#include "tables.hpp"
#include "counting.hpp"
#include "translate.hpp"
#include "basis.hpp"
#include "verify.hpp"
