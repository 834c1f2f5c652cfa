// SplitMix64 and fnv1a64 are header-only; this unit exists so the core
// library always has at least the translation units CMake lists for it.
#include "parsim/core/rng.hpp"
