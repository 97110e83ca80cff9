#pragma once

// Umbrella header.

#include "utq/common.hpp"
#include "utq/roots.hpp"
#include "utq/poly.hpp"
#include "utq/counting.hpp"
#include "utq/field.hpp"
#include "utq/matrix.hpp"
#include "utq/group.hpp"
#include "utq/superalg.hpp"
#include "utq/constituents.hpp"
#include "utq/cyclo.hpp"
#include "utq/classfun.hpp"
#include "utq/dixon.hpp"
#include "utq/oracle.hpp"
#include "utq/serialize.hpp"
#include "utq/suites.hpp"
