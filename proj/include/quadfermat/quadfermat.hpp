#pragma once

#include "quadfermat/bigrational.hpp"
#include "quadfermat/curve.hpp"
#include "quadfermat/errors.hpp"
#include "quadfermat/integer.hpp"
#include "quadfermat/power.hpp"
#include "quadfermat/quad.hpp"
#include "quadfermat/records.hpp"
#include "quadfermat/ring.hpp"
#include "quadfermat/search.hpp"
