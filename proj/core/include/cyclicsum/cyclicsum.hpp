#pragma once

#include "cyclicsum/algebra.hpp"
#include "cyclicsum/combinatorics.hpp"
#include "cyclicsum/linalg.hpp"
#include "cyclicsum/multi_index.hpp"
#include "cyclicsum/numeric.hpp"
#include "cyclicsum/operators.hpp"
#include "cyclicsum/parallel.hpp"
#include "cyclicsum/poly.hpp"
#include "cyclicsum/serialize.hpp"
#include "cyclicsum/tensor.hpp"
#include "cyclicsum/word.hpp"
