#pragma once

#include "rqf/class_group.hpp"
#include "rqf/dedekind_sums.hpp"
#include "rqf/exact_arith.hpp"
#include "rqf/pell.hpp"
#include "rqf/quad_field.hpp"
#include "rqf/sweep.hpp"
#include "rqf/units_cf.hpp"
#include "rqf/verify.hpp"
#include "rqf/zeta_values.hpp"
