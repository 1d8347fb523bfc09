#pragma once

#include <gridlock/chain_complex.hpp>
#include <gridlock/error.hpp>
#include <gridlock/f2.hpp>
#include <gridlock/grid.hpp>
#include <gridlock/io.hpp>
#include <gridlock/legendrian.hpp>
#include <gridlock/pages.hpp>
#include <gridlock/script.hpp>
#include <gridlock/slope.hpp>
