#pragma once

// Umbrella header: binary aggregation with integrity constraints, majority
// paradox detection and construction, and the classic scenario encodings.

#include "binagg/aggregation.hpp"
#include "binagg/agenda.hpp"
#include "binagg/ballot.hpp"
#include "binagg/encoding.hpp"
#include "binagg/errors.hpp"
#include "binagg/formula.hpp"
#include "binagg/implicates.hpp"
#include "binagg/io.hpp"
#include "binagg/issues.hpp"
#include "binagg/parse.hpp"
#include "binagg/preferences.hpp"
#include "binagg/report.hpp"
#include "binagg/safety.hpp"
#include "binagg/scenarios.hpp"
#include "binagg/semantics.hpp"
