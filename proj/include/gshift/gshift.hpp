#pragma once

#include "gshift/action.hpp"
#include "gshift/alphabet.hpp"
#include "gshift/config.hpp"
#include "gshift/error.hpp"
#include "gshift/index_map.hpp"
#include "gshift/index_set.hpp"
#include "gshift/literals.hpp"
#include "gshift/pairing.hpp"
#include "gshift/random.hpp"
#include "gshift/relations.hpp"
#include "gshift/serialize.hpp"
#include "gshift/topology.hpp"
#include "gshift/verify.hpp"
#include "gshift/witnesses.hpp"
