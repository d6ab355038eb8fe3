#pragma once

#include "dtlab/algebra.hpp"
#include "dtlab/assignment.hpp"
#include "dtlab/decision_tree.hpp"
#include "dtlab/distance.hpp"
#include "dtlab/distribution.hpp"
#include "dtlab/experiment.hpp"
#include "dtlab/function.hpp"
#include "dtlab/generators.hpp"
#include "dtlab/io.hpp"
#include "dtlab/learners/consis.hpp"
#include "dtlab/learners/min_tree.hpp"
#include "dtlab/learners/nonproper.hpp"
#include "dtlab/learners/outcome.hpp"
#include "dtlab/learners/pac.hpp"
#include "dtlab/learners/universal.hpp"
#include "dtlab/oracle.hpp"
#include "dtlab/polynomial.hpp"
#include "dtlab/reductions.hpp"
#include "dtlab/restriction.hpp"
#include "dtlab/rng.hpp"
#include "dtlab/terms.hpp"
#include "dtlab/testers/appendix.hpp"
#include "dtlab/testers/depth.hpp"
#include "dtlab/testers/report.hpp"
#include "dtlab/testers/size.hpp"
#include "dtlab/truth_table.hpp"
