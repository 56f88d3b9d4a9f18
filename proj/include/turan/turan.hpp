#ifndef TURAN_TURAN_HPP
#define TURAN_TURAN_HPP

#include "turan/alias_table.hpp"
#include "turan/baseline.hpp"
#include "turan/estimator.hpp"
#include "turan/graph.hpp"
#include "turan/oracle.hpp"
#include "turan/random.hpp"
#include "turan/shadow.hpp"

#endif // TURAN_TURAN_HPP
