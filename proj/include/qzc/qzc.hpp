// qzc.hpp — umbrella header

#pragma once

#include "qzc/cli.hpp"
#include "qzc/concurrence.hpp"
#include "qzc/dynamics.hpp"
#include "qzc/emit.hpp"
#include "qzc/errors.hpp"
#include "qzc/mat4.hpp"
#include "qzc/model.hpp"
#include "qzc/presets.hpp"
#include "qzc/sweep.hpp"
#include "qzc/validate.hpp"
#include "qzc/volterra.hpp"
#include "qzc/zeno.hpp"
