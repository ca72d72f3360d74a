#pragma once

// Umbrella header for the exact Gram/Weingarten determinant library.

#include "gramdet/bigint.hpp"
#include "gramdet/cache.hpp"
#include "gramdet/chebyshev.hpp"
#include "gramdet/closed_forms.hpp"
#include "gramdet/epi.hpp"
#include "gramdet/gram.hpp"
#include "gramdet/haar.hpp"
#include "gramdet/json_io.hpp"
#include "gramdet/matrix.hpp"
#include "gramdet/modular.hpp"
#include "gramdet/orthopoly.hpp"
#include "gramdet/parallel.hpp"
#include "gramdet/partition.hpp"
#include "gramdet/poly.hpp"
#include "gramdet/rational.hpp"
#include "gramdet/young.hpp"
