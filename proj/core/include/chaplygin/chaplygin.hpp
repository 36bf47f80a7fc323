#pragma once

#include "chaplygin/delta_shock.hpp"
#include "chaplygin/errors.hpp"
#include "chaplygin/fan_field.hpp"
#include "chaplygin/riemann1d.hpp"
#include "chaplygin/state.hpp"
#include "chaplygin/subsolution.hpp"
#include "chaplygin/verify.hpp"
