#pragma once

#include "fzgraph/algebra.hpp"
#include "fzgraph/bigint.hpp"
#include "fzgraph/corpus.hpp"
#include "fzgraph/error.hpp"
#include "fzgraph/graph.hpp"
#include "fzgraph/hamiltonian.hpp"
#include "fzgraph/induced.hpp"
#include "fzgraph/lattice.hpp"
#include "fzgraph/linalg.hpp"
#include "fzgraph/matrix.hpp"
#include "fzgraph/multi_index.hpp"
#include "fzgraph/nilpotent.hpp"
#include "fzgraph/oracles.hpp"
