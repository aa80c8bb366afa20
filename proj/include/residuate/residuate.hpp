#pragma once

#include "residuate/concepts.hpp"
#include "residuate/error.hpp"
#include "residuate/extended.hpp"
#include "residuate/isbell.hpp"
#include "residuate/legendre.hpp"
#include "residuate/qcategory.hpp"
#include "residuate/qmatrix.hpp"
#include "residuate/quantale.hpp"
#include "residuate/semimodule.hpp"
#include "residuate/tight_span.hpp"
#include "residuate/tropical.hpp"
