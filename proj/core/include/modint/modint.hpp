#pragma once

#include "modint/automaton.hpp"
#include "modint/conjunction.hpp"
#include "modint/dmts_ops.hpp"
#include "modint/dot_export.hpp"
#include "modint/embeddings.hpp"
#include "modint/errors.hpp"
#include "modint/ia_ops.hpp"
#include "modint/mia_ops.hpp"
#include "modint/parallel.hpp"
#include "modint/refinement.hpp"
#include "modint/state_name.hpp"
#include "modint/text_format.hpp"
#include "modint/weak_closure.hpp"
