#pragma once

#include "percol/errors.hpp"
#include "percol/multipath.hpp"
#include "percol/finite_graph.hpp"
#include "percol/equivalence.hpp"
#include "percol/constructions.hpp"
#include "percol/enumeration.hpp"
#include "percol/io.hpp"
