#pragma once

#include "arith.hpp"
#include "bit_vector.hpp"
#include "fft.hpp"
#include "fft_io.hpp"
#include "metrics.hpp"
#include "netlist.hpp"
#include "netlist_io.hpp"
#include "urdhva.hpp"
#include "verify.hpp"
