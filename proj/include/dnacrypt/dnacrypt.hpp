#pragma once

#include "dnacrypt/amino_sbox.hpp"
#include "dnacrypt/bench.hpp"
#include "dnacrypt/biosnow.hpp"
#include "dnacrypt/bit_block.hpp"
#include "dnacrypt/bits.hpp"
#include "dnacrypt/container.hpp"
#include "dnacrypt/error.hpp"
#include "dnacrypt/gf2.hpp"
#include "dnacrypt/image.hpp"
#include "dnacrypt/improved_cipher.hpp"
#include "dnacrypt/key_recovery.hpp"
#include "dnacrypt/legacy_cipher.hpp"
#include "dnacrypt/metrics.hpp"
#include "dnacrypt/quad.hpp"
#include "dnacrypt/randomness.hpp"
