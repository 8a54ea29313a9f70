#pragma once

#include "lrs/error.hpp"
#include "lrs/random.hpp"
#include "lrs/chain_ring.hpp"
#include "lrs/extension.hpp"
#include "lrs/matrix.hpp"
#include "lrs/sum_rank.hpp"
#include "lrs/skew_poly.hpp"
#include "lrs/lrs_code.hpp"
#include "lrs/decoder.hpp"
#include "lrs/netcode.hpp"
#include "lrs/serialize.hpp"
#include "lrs/selftest.hpp"
