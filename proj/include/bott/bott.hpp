#pragma once

#include "bott/bott_matrix.hpp"
#include "bott/cohomology.hpp"
#include "bott/group_model.hpp"
#include "bott/json_io.hpp"
#include "bott/stiefel_whitney.hpp"
#include "bott/sweep.hpp"
