#ifndef BECK_BECK_HPP
#define BECK_BECK_HPP

#include "beck/errors.hpp"
#include "beck/scalar.hpp"
#include "beck/algebra.hpp"
#include "beck/magma.hpp"
#include "beck/varieties.hpp"
#include "beck/generic.hpp"
#include "beck/identity.hpp"
#include "beck/registry.hpp"
#include "beck/free_algebra.hpp"
#include "beck/derive.hpp"
#include "beck/relations.hpp"
#include "beck/groebner.hpp"
#include "beck/extension.hpp"
#include "beck/session.hpp"

#endif  // BECK_BECK_HPP
