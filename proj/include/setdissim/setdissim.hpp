#pragma once

#include "setdissim/rational.hpp"
#include "setdissim/value.hpp"
#include "setdissim/sets.hpp"
#include "setdissim/distances.hpp"
#include "setdissim/axioms.hpp"
#include "setdissim/verify.hpp"
#include "setdissim/report.hpp"
