#pragma once

#include "chartab/analysis.hpp"
#include "chartab/classfun.hpp"
#include "chartab/cyclo.hpp"
#include "chartab/errors.hpp"
#include "chartab/io.hpp"
#include "chartab/perm.hpp"
#include "chartab/permgroup.hpp"
#include "chartab/reps.hpp"
#include "chartab/tablegen.hpp"
