#pragma once

// Exact toolkit for extreme contractions between finite-dimensional
// polygonal Banach spaces.

#include "ec/audit.hpp"
#include "ec/catalog.hpp"
#include "ec/dd.hpp"
#include "ec/enumerate.hpp"
#include "ec/error.hpp"
#include "ec/extremal.hpp"
#include "ec/json_io.hpp"
#include "ec/linalg.hpp"
#include "ec/operator.hpp"
#include "ec/scalar.hpp"
#include "ec/space.hpp"
