#pragma once

#include "barbell/error.hpp"
#include "barbell/word.hpp"
#include "barbell/group_ring.hpp"
#include "barbell/expression.hpp"
#include "barbell/pattern.hpp"
#include "barbell/reference_data.hpp"
#include "barbell/barbell_w3.hpp"
#include "barbell/solver.hpp"
#include "barbell/verifier.hpp"
#include "barbell/report_io.hpp"
