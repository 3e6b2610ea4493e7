// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact effective resistances, Kirchhoff index and metrized-graph
// invariants of the n-rung ladder with unit edges. Everything is computed
// over Q(sqrt(3)) or plain rationals; floating point only enters the
// spectral cross-checks and final rendering.

#include "closed_forms.hpp"     // IWYU pragma: export
#include "errors.hpp"           // IWYU pragma: export
#include "invariants.hpp"       // IWYU pragma: export
#include "ladder_spec.hpp"      // IWYU pragma: export
#include "oracle.hpp"           // IWYU pragma: export
#include "rational.hpp"         // IWYU pragma: export
#include "reduction.hpp"        // IWYU pragma: export
#include "resistance_table.hpp" // IWYU pragma: export
#include "sequences.hpp"        // IWYU pragma: export
#include "surd3.hpp"            // IWYU pragma: export
