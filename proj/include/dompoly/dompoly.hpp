#pragma once

#include "dompoly/bigint.hpp"
#include "dompoly/closed_forms.hpp"
#include "dompoly/config.hpp"
#include "dompoly/enumerate.hpp"
#include "dompoly/errors.hpp"
#include "dompoly/expr.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/graph_gen.hpp"
#include "dompoly/graph_io.hpp"
#include "dompoly/path_cycle.hpp"
#include "dompoly/poly.hpp"
#include "dompoly/stats.hpp"
#include "dompoly/verify.hpp"
