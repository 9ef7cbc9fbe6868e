#ifndef WIENER_WIENER_HPP
#define WIENER_WIENER_HPP

#include "wiener/dp_convex.hpp"
#include "wiener/error.hpp"
#include "wiener/geometry.hpp"
#include "wiener/instances.hpp"
#include "wiener/io.hpp"
#include "wiener/oracle.hpp"
#include "wiener/paths.hpp"
#include "wiener/svg.hpp"
#include "wiener/tree.hpp"

#endif  // WIENER_WIENER_HPP
