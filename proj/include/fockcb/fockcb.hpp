#pragma once

#include "fockcb/error.hpp"
#include "fockcb/partition.hpp"
#include "fockcb/laurent.hpp"
#include "fockcb/abacus.hpp"
#include "fockcb/wedge.hpp"
#include "fockcb/parallel.hpp"
#include "fockcb/blocks.hpp"
#include "fockcb/canonical.hpp"
#include "fockcb/mullineux.hpp"
#include "fockcb/verify.hpp"
#include "fockcb/properties.hpp"
#include "fockcb/io.hpp"
