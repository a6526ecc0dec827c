#pragma once

// Umbrella header.

#include <condio/bridge.hpp>
#include <condio/chains.hpp>
#include <condio/continuants.hpp>
#include <condio/equation.hpp>
#include <condio/integers.hpp>
#include <condio/maps.hpp>
#include <condio/polynomials.hpp>
#include <condio/seeds.hpp>
#include <condio/tuples.hpp>
