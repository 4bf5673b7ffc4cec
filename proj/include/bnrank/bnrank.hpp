#pragma once

// Everything at once.

#include "bnrank/a_plus.hpp"
#include "bnrank/affine_map.hpp"
#include "bnrank/brandt.hpp"
#include "bnrank/budget.hpp"
#include "bnrank/errors.hpp"
#include "bnrank/index_set.hpp"
#include "bnrank/oracle.hpp"
#include "bnrank/permutation.hpp"
#include "bnrank/ranks.hpp"
#include "bnrank/report.hpp"
#include "bnrank/search.hpp"
#include "bnrank/semigroup.hpp"
#include "bnrank/table_io.hpp"
#include "bnrank/verify.hpp"
#include "bnrank/witnesses.hpp"
