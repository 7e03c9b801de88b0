#pragma once

#include "rational.hpp"
#include "scalar.hpp"
#include "polynomial.hpp"
#include "permutation.hpp"
#include "combinatorics.hpp"
#include "graphs.hpp"
#include "cones.hpp"
#include "polyops.hpp"
#include "linalg.hpp"
#include "module.hpp"
#include "relations.hpp"
#include "verma.hpp"
#include "json_io.hpp"
