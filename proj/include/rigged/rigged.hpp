#pragma once

/// @file rigged.hpp
/// @brief Umbrella header.

#include "rigged/qpoly.hpp"
#include "rigged/crystal.hpp"
#include "rigged/plactic.hpp"
#include "rigged/paths.hpp"
#include "rigged/rc.hpp"
#include "rigged/bijection.hpp"
#include "rigged/rc_crystal.hpp"
#include "rigged/io.hpp"
#include "rigged/check.hpp"
