#pragma once

#include "supertab/bigint.hpp"
#include "supertab/borel.hpp"
#include "supertab/branching.hpp"
#include "supertab/errors.hpp"
#include "supertab/json_io.hpp"
#include "supertab/lr.hpp"
#include "supertab/partition.hpp"
#include "supertab/tableau.hpp"
#include "supertab/verify.hpp"
