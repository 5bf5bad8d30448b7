#pragma once

#include "analysis.hpp"
#include "claims/basic.hpp"
#include "congruence.hpp"
#include "context.hpp"
#include "element_set.hpp"
#include "enumerator.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "ideals.hpp"
#include "irreducible.hpp"
#include "json_io.hpp"
#include "local.hpp"
#include "order.hpp"
#include "quotients.hpp"
#include "registry.hpp"
#include "report.hpp"
#include "semiring.hpp"
#include "topology.hpp"
#include "verdict.hpp"
