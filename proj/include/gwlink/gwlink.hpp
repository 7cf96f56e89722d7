#pragma once

// Umbrella header: the whole library in one include.

#include "gwlink/version.hpp"
#include "gwlink/error.hpp"
#include "gwlink/quantity.hpp"
#include "gwlink/constants.hpp"
#include "gwlink/radiation.hpp"
#include "gwlink/transducer.hpp"
#include "gwlink/orbit.hpp"
#include "gwlink/linkbudget.hpp"
#include "gwlink/config.hpp"
#include "gwlink/report.hpp"
