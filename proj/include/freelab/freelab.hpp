#pragma once

#include "freelab/errors.hpp"
#include "freelab/families.hpp"
#include "freelab/fields.hpp"
#include "freelab/freeness.hpp"
#include "freelab/groebner.hpp"
#include "freelab/kummer.hpp"
#include "freelab/linalg.hpp"
#include "freelab/monomial.hpp"
#include "freelab/oracle.hpp"
#include "freelab/parser.hpp"
#include "freelab/polynomial.hpp"
#include "freelab/report.hpp"
#include "freelab/syzygy.hpp"
