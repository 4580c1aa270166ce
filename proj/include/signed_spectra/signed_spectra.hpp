#pragma once

// Umbrella header.

#include "signed_spectra/census.hpp"
#include "signed_spectra/exact_linalg.hpp"
#include "signed_spectra/families.hpp"
#include "signed_spectra/forbidden.hpp"
#include "signed_spectra/partitions.hpp"
#include "signed_spectra/signed_graph.hpp"
#include "signed_spectra/spectrum.hpp"
#include "signed_spectra/switching_iso.hpp"
