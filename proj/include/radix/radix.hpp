#pragma once

#include "radix/common.hpp"
#include "radix/constants.hpp"
#include "radix/log_accumulator.hpp"
#include "radix/radix_core.hpp"
#include "radix/sieve.hpp"
#include "radix/product_engine.hpp"
#include "radix/asymptotics.hpp"
#include "radix/serialization.hpp"
#include "radix/validation.hpp"
#include "radix/bench.hpp"
