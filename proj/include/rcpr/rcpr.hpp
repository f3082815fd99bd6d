#pragma once

#include "rcpr/rational.hpp"
#include "rcpr/itemset.hpp"
#include "rcpr/bitset.hpp"
#include "rcpr/dataset.hpp"
#include "rcpr/measures.hpp"
#include "rcpr/apriori_gen.hpp"
#include "rcpr/maximal_miner.hpp"
#include "rcpr/representation.hpp"
#include "rcpr/rcpr_miner.hpp"
#include "rcpr/oracle.hpp"
#include "rcpr/rules.hpp"
