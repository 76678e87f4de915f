#pragma once

#include "cyfib/arith.hpp"
#include "cyfib/surface.hpp"
#include "cyfib/chow.hpp"
#include "cyfib/cubic.hpp"
#include "cyfib/enumerate.hpp"
#include "cyfib/verify.hpp"
#include "cyfib/report.hpp"
#include "cyfib/figure.hpp"
#include "cyfib/run.hpp"
