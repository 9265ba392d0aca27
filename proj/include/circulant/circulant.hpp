#pragma once

// Umbrella header: integral circulant graphs, their spectra, diameters,
// extremal orders and quantum-walk dynamics.

#include "circulant/diameter.hpp"
#include "circulant/extremal.hpp"
#include "circulant/graph.hpp"
#include "circulant/numtheory.hpp"
#include "circulant/quantum.hpp"
#include "circulant/serialize.hpp"
#include "circulant/spectral.hpp"
