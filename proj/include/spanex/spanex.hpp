#pragma once

// Umbrella header for the spanex verification toolkit.

#include "spanex/errors.hpp"
#include "spanex/excess.hpp"
#include "spanex/extremal.hpp"
#include "spanex/family_polys.hpp"
#include "spanex/graph.hpp"
#include "spanex/graph6.hpp"
#include "spanex/harness.hpp"
#include "spanex/isomorphism.hpp"
#include "spanex/multipoly.hpp"
#include "spanex/quotient.hpp"
#include "spanex/spectral.hpp"
#include "spanex/unipoly.hpp"
