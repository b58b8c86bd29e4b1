#pragma once

#include "abelext.hpp"
#include "commutator.hpp"
#include "constructions.hpp"
#include "divisibility.hpp"
#include "error.hpp"
#include "identities.hpp"
#include "io.hpp"
#include "loop.hpp"
#include "mappings.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "subloops.hpp"
