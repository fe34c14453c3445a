#pragma once

#include "config.hpp"
#include "errors.hpp"
#include "core.hpp"
#include "exterior.hpp"
#include "hodge.hpp"
#include "projective.hpp"
#include "random.hpp"
#include "nelder_mead.hpp"
#include "experiments.hpp"
#include "verify.hpp"
#include "io.hpp"
#include "commands.hpp"
