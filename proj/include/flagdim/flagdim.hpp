#pragma once

/// Umbrella header: exact classification engine for minimal-dimension
/// equivariant embeddings of real and complex flag manifolds.

#include "classify.hpp"
#include "common.hpp"
#include "exactlinalg.hpp"
#include "fixedpoints.hpp"
#include "harmonic.hpp"
#include "isospectral.hpp"
#include "multiplicity.hpp"
#include "rootsys.hpp"
#include "weyldim.hpp"
