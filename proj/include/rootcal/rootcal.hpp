#pragma once

// Umbrella include.  The CLI front end (cli.hpp) is separate because it
// pulls in CLI11.

#include "rootcal/calogero.hpp"
#include "rootcal/closed_form.hpp"
#include "rootcal/enumerate.hpp"
#include "rootcal/lattice.hpp"
#include "rootcal/numeric.hpp"
#include "rootcal/report.hpp"
#include "rootcal/spectral.hpp"
#include "rootcal/strings.hpp"
#include "rootcal/weyl.hpp"
