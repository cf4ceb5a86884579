#pragma once

#include "mstate/bipartite_lu.hpp"
#include "mstate/catalysis.hpp"
#include "mstate/errors.hpp"
#include "mstate/ghz.hpp"
#include "mstate/json_io.hpp"
#include "mstate/prob_max.hpp"
#include "mstate/protocol.hpp"
#include "mstate/qstate.hpp"
#include "mstate/rational.hpp"
#include "mstate/schmidt.hpp"
#include "mstate/source_ent.hpp"
#include "mstate/symmetric.hpp"
