#pragma once

#include "svt/arith.hpp"
#include "svt/bijection.hpp"
#include "svt/formulas.hpp"
#include "svt/genfun.hpp"
#include "svt/lemmas.hpp"
#include "svt/motzkin.hpp"
#include "svt/multipoly.hpp"
#include "svt/polyseries.hpp"
#include "svt/shapes.hpp"
#include "svt/verify.hpp"
#include "svt/zseries.hpp"
