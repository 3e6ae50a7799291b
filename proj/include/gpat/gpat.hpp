#pragma once

// Umbrella header: generalized permutation patterns, the combinatorial
// structures their avoidance classes biject onto, the exact sequences and
// polynomials counting them, and the claim-verification harness.

#include "gpat/bijections.hpp"
#include "gpat/harness.hpp"
#include "gpat/int128.hpp"
#include "gpat/involution.hpp"
#include "gpat/lattice_path.hpp"
#include "gpat/pattern.hpp"
#include "gpat/permutation.hpp"
#include "gpat/polynomial.hpp"
#include "gpat/sequences.hpp"
#include "gpat/set_partition.hpp"
