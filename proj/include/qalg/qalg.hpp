#pragma once

#include "qalg/errors.hpp"
#include "qalg/rational.hpp"
#include "qalg/scalar.hpp"
#include "qalg/laurent.hpp"
#include "qalg/ratfunc.hpp"
#include "qalg/torus.hpp"
#include "qalg/localization.hpp"
#include "qalg/uqsl2.hpp"
#include "qalg/mlambda.hpp"
#include "qalg/rank_one.hpp"
#include "qalg/render.hpp"
#include "qalg/expr.hpp"
#include "qalg/elaborate.hpp"
