#pragma once

#include "einflag/closed_forms.hpp"
#include "einflag/errors.hpp"
#include "einflag/flagmodel.hpp"
#include "einflag/interval.hpp"
#include "einflag/rational.hpp"
#include "einflag/realroots.hpp"
#include "einflag/resultant.hpp"
#include "einflag/solver/case1.hpp"
#include "einflag/solver/case2.hpp"
#include "einflag/solver/certify.hpp"
#include "einflag/solver/duality.hpp"
#include "einflag/solver/enumerate.hpp"
#include "einflag/solver/lemmas.hpp"
#include "einflag/solver/newton.hpp"
#include "einflag/solver/types.hpp"
#include "einflag/sparse_poly.hpp"
#include "einflag/unipoly.hpp"
