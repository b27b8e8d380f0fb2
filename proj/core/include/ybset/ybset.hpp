#pragma once

#include "ybset/action_family.hpp"
#include "ybset/enumerate.hpp"
#include "ybset/json_io.hpp"
#include "ybset/matched_product.hpp"
#include "ybset/op_table.hpp"
#include "ybset/perm.hpp"
#include "ybset/solution.hpp"
