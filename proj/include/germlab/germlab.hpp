#pragma once

// Umbrella header: exact local invariants of hypersurface germs and the
// pullback verification pipeline.

#include "germlab/catalog.hpp"
#include "germlab/errors.hpp"
#include "germlab/gcd.hpp"
#include "germlab/json_io.hpp"
#include "germlab/local_order.hpp"
#include "germlab/macaulay.hpp"
#include "germlab/map_germ.hpp"
#include "germlab/milnor.hpp"
#include "germlab/monomial.hpp"
#include "germlab/parse.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/rational.hpp"
#include "germlab/ring.hpp"
#include "germlab/rng.hpp"
#include "germlab/standard_basis.hpp"
