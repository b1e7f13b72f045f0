#pragma once

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "poly_text.hpp"
#include "groebner.hpp"
#include "curve.hpp"
#include "jacobian.hpp"
#include "oracle.hpp"
#include "script.hpp"
