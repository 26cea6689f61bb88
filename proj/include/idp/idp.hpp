#pragma once

#include "idp/error.hpp"
#include "idp/checked.hpp"
#include "idp/matrix.hpp"
#include "idp/bareiss.hpp"
#include "idp/simplex.hpp"
#include "idp/ehrhart.hpp"
#include "idp/monomial.hpp"
#include "idp/toric.hpp"
#include "idp/groebner.hpp"
#include "idp/triangulation.hpp"
#include "idp/pipeline.hpp"
#include "idp/serialize.hpp"
