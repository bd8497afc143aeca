#pragma once

#include "riesz/circle.hpp"
#include "riesz/constants.hpp"
#include "riesz/extremals.hpp"
#include "riesz/json_io.hpp"
#include "riesz/lemmas.hpp"
#include "riesz/minorant.hpp"
#include "riesz/parallel.hpp"
#include "riesz/params.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/report.hpp"
#include "riesz/search.hpp"
