#pragma once

// Finite workbench for right near-domains, phi-systems, and the sharply
// 2-transitive groups they generate.  All structures live on the carrier
// B = {0..n-1} with 0 the additive zero and 1 the multiplicative unit.

#include "s2t/equivalence.hpp"
#include "s2t/example_families.hpp"
#include "s2t/galois_field.hpp"
#include "s2t/group_table.hpp"
#include "s2t/json_io.hpp"
#include "s2t/near_domain.hpp"
#include "s2t/phi_system.hpp"
#include "s2t/report.hpp"
#include "s2t/search.hpp"
#include "s2t/two_transitive.hpp"
