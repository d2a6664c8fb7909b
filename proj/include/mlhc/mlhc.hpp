#pragma once

// Hamilton cycles in the middle levels graph: Dyck-word primitives, lexical
// matchings, flip-sequence paths, 6-cycle gadgets, plane-tree auxiliary graph
// and cycle assembly/verification.

#include "mlhc/bitstring.hpp"
#include "mlhc/dyck.hpp"
#include "mlhc/errors.hpp"
#include "mlhc/hamilton.hpp"
#include "mlhc/lexical_matching.hpp"
#include "mlhc/plane_forest.hpp"
#include "mlhc/sigma.hpp"
#include "mlhc/six_cycles.hpp"
