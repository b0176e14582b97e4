#ifndef ANNULUS_ANNULUS_HPP
#define ANNULUS_ANNULUS_HPP

#include "annulus/catalog_io.hpp"
#include "annulus/diagram.hpp"
#include "annulus/error.hpp"
#include "annulus/families.hpp"
#include "annulus/labels.hpp"
#include "annulus/rational.hpp"

#endif  // ANNULUS_ANNULUS_HPP
