#pragma once
// Convenience umbrella: pulls in the whole library in dependency order.

#include "diagram.hpp"
#include "order.hpp"
#include "subterms.hpp"
#include "relations.hpp"
#include "validity.hpp"
#include "indexseq.hpp"
#include "decomposition.hpp"
#include "io.hpp"
#include "enumeration.hpp"
#include "operators.hpp"
#include "harness.hpp"
