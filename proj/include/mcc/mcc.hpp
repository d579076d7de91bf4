#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "factored.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "pencil.hpp"
#include "enumerate.hpp"
#include "witness.hpp"
#include "polytope.hpp"
#include "padic.hpp"
#include "padic_series.hpp"
#include "multgroup.hpp"
#include "group.hpp"
#include "group_matrix.hpp"
#include "auxpoly.hpp"
#include "config.hpp"
#include "json_io.hpp"
#include "suite.hpp"
