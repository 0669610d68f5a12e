// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "citemetric/stats/distributions.hpp"
#include "citemetric/stats/group_tests.hpp"
#include "citemetric/stats/pca.hpp"
#include "citemetric/stats/ranks.hpp"
#include "citemetric/stats/regression.hpp"
#include "citemetric/stats/summation.hpp"
