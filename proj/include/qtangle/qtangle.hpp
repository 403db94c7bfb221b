#pragma once

#include "qtangle/error.hpp"
#include "qtangle/rational.hpp"
#include "qtangle/laurent.hpp"
#include "qtangle/poly.hpp"
#include "qtangle/rational_fn.hpp"
#include "qtangle/series.hpp"
#include "qtangle/cyclotomic.hpp"
#include "qtangle/zform.hpp"
#include "qtangle/coxeter.hpp"
#include "qtangle/catalog.hpp"
#include "qtangle/census.hpp"
#include "qtangle/tangle_fraction.hpp"
#include "qtangle/singularities.hpp"
#include "qtangle/molien.hpp"
#include "qtangle/diagram.hpp"
#include "qtangle/tangle_dsl.hpp"
#include "qtangle/certify.hpp"
#include "qtangle/json_io.hpp"
