#pragma once

// Umbrella header for the swing-twist decomposition library.

#include "swingtwist/bench.hpp"
#include "swingtwist/cl3.hpp"
#include "swingtwist/decompose.hpp"
#include "swingtwist/errors.hpp"
#include "swingtwist/quaternion.hpp"
#include "swingtwist/random.hpp"
#include "swingtwist/validate.hpp"
