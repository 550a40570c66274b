#pragma once

#include "wbptree/bigint.hpp"
#include "wbptree/closedform.hpp"
#include "wbptree/count.hpp"
#include "wbptree/error.hpp"
#include "wbptree/export.hpp"
#include "wbptree/hcmu.hpp"
#include "wbptree/number_theory.hpp"
#include "wbptree/oracle.hpp"
#include "wbptree/partition.hpp"
#include "wbptree/passport.hpp"
#include "wbptree/verify.hpp"
