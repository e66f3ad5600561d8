#pragma once

#include "binagg/formula.hpp"
#include "binagg/issues.hpp"

namespace binagg {

/// An issue set together with the integrity constraint defined over it.
struct Encoding {
    IssueSet issues;
    Formula constraint;
};

}  // namespace binagg
